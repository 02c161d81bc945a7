fn main() {
    println!("{}", rqc_core::qsim::smoke());
}

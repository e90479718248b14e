fn main() -> std::process::ExitCode {
    f4_multiplet::cli::main()
}

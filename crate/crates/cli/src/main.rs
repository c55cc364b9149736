fn main() -> std::process::ExitCode {
    linperm_cli::main_with_env()
}

fn main() {
    // CLI wired up once the experiment driver lands.
}

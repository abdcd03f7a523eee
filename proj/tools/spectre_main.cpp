// Placeholder until the subcommand wiring lands.
int main() { return 0; }

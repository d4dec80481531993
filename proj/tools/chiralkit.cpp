// CLI driver; subcommands are filled in as the library lands.
int main() { return 0; }

// Placeholder entry point; subcommands land here as the library fills in.
#include <cstdio>

int main() {
    std::puts("exsys: no subcommand");
    return 2;
}

#include "hyperchess/cli.hpp"

int main(int argc, char** argv) {
    return hyperchess::cli::run(argc, argv);
}

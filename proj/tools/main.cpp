#include "pbw/cli.hpp"

int main(int argc, char** argv) {
    return pbw::cli_main(argc, argv);
}

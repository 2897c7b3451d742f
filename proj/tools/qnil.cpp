#include "qnil/cli.hpp"

int main(int argc, char** argv) { return qnil::cli::run(argc, argv); }

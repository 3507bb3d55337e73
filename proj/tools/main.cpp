#include "schur/cli.hpp"

int main(int argc, char** argv) { return schur::run(argc, argv); }

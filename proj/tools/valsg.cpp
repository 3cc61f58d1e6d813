#include "valsg/cli.hpp"

int main(int argc, char** argv) { return valsg::cli_main(argc, argv); }

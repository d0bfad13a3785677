#include "lamina/io.hpp"

int main(int argc, char** argv) { return lamina::run_cli(argc, argv); }

// Writes the built-in default parameter table to a file (or stdout). Keeps
// data/fsts-default.table regenerable from the code that defines it.

#include <fstream>
#include <iostream>

#include "fsts/default_table.hpp"

int main(int argc, char** argv) {
    std::string text = fsts::serialize_parameter_table(fsts::default_parameter_table());
    if (argc < 2) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << argv[1] << "\n";
        return 1;
    }
    out << text;
    return 0;
}

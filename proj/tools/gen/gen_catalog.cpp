#include "hypertheta/catalog.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    const std::string text = hypertheta::catalog_to_json(hypertheta::build_catalog());
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

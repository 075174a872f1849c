#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "nok/modelfile.hpp"

inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("NOK_DATA_DIR");
    return std::string(dir ? dir : "data") + "/" + name;
}

inline nok::SurfaceModel load_data_model(const std::string& name) { return nok::load_model(data_path(name)); }

inline nok::Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den = 4) {
    std::uniform_int_distribution<int> num(lo * max_den, hi * max_den);
    std::uniform_int_distribution<int> den(1, max_den);
    nok::Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline nok::DivisorClass random_class(std::mt19937& rng, std::size_t rank, int lo, int hi, int max_den = 4) {
    nok::DivisorClass d(rank);
    for (std::size_t i = 0; i < rank; ++i) d.coords[i] = random_rational(rng, lo, hi, max_den);
    return d;
}

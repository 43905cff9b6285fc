#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cmc/idealops.hpp"
#include "cmc/parser.hpp"

namespace support {

inline cmc::RingPtr ring(const cmc::Field& F, std::initializer_list<const char*> names) {
    return cmc::Ring::make(F, std::vector<std::string>(names.begin(), names.end()));
}

inline std::vector<cmc::Polynomial> polys(const cmc::RingPtr& R, std::initializer_list<const char*> texts) {
    std::vector<cmc::Polynomial> out;
    for (const char* t : texts) out.push_back(cmc::parse_polynomial(R, t));
    return out;
}

inline cmc::Ideal ideal(const cmc::RingPtr& R, std::initializer_list<const char*> texts) {
    return cmc::Ideal(R, polys(R, texts));
}

inline const std::vector<cmc::Field>& small_fields() {
    static const std::vector<cmc::Field> f{cmc::Field::rationals(), cmc::Field::prime(2), cmc::Field::prime(3)};
    return f;
}

} // namespace support

#pragma once

#include <string>

namespace localext {

struct FieldInvariants {
    long e = 1;
    long f = 1;
    std::string galois_group;
    std::string inertia_group;
    std::string quadratic_subextension;
    long disc_exponent = 0;  // valuation of the field discriminant
    bool galois = false;
};

}  // namespace localext

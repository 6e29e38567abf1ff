#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "sepdiff/error.hpp"
#include "sepdiff/parser.hpp"
#include "sepdiff/sampling.hpp"

namespace th {

using namespace sepdiff;

inline FieldPresentation gf5t() { return make_presentation(5, {}, true); }
inline FieldPresentation gf3ct() { return make_presentation(3, {"c"}, true); }
inline FieldPresentation gf2ct() { return make_presentation(2, {"c"}, true); }
inline FieldPresentation gf2t1t2() { return make_presentation(2, {"t1", "t2"}, false); }

inline const std::vector<std::string> X{"x"};

inline DiffPoly dp(const std::string& s, const FieldPresentation& K) {
    return parse_dpoly(s, K, X);
}
inline RationalFunction el(const std::string& s, const FieldPresentation& K) {
    return parse_element(s, K);
}

}  // namespace th

#define CHECK_ERRC(expr, expected)                       \
    do {                                                 \
        bool caught_ = false;                            \
        try {                                            \
            (void)(expr);                                \
        } catch (const sepdiff::Error& e_) {             \
            caught_ = true;                              \
            CHECK(e_.code() == (expected));              \
        }                                                \
        CHECK_MESSAGE(caught_, "expected error " #expected); \
    } while (0)

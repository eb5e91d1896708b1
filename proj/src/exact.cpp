#include "ytw/exact.hpp"

#include "ytw/errors.hpp"

namespace ytw {

std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw usage_error("bad rational literal: '" + s + "'");
    q.canonicalize();
    if (q.get_den() <= 0) throw usage_error("bad rational literal: '" + s + "'");
    return q;
}

} // namespace ytw

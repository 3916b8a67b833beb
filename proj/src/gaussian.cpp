#include "whtk/gaussian.hpp"

namespace whtk {

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::string to_string(const GaussianRational& c) {
    if (c.im() == 0) return to_string(c.re());
    std::string im_abs = to_string(Rational(abs(c.im())));
    std::string im_part = (im_abs == "1" ? "" : im_abs) + "i";
    if (c.re() == 0) return (c.im() < 0 ? "-" : "") + im_part;
    return to_string(c.re()) + (c.im() < 0 ? "-" : "+") + im_part;
}

int compare_for_ordering(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() != b.re()) return a.re() < b.re() ? -1 : 1;
    if (a.im() != b.im()) return a.im() < b.im() ? -1 : 1;
    return 0;
}

}  // namespace whtk

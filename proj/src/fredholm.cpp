#include "whtk/fredholm.hpp"

namespace whtk {
namespace {

bool roots_only_on_circle(const Polynomial& p) {
    CircleSplit s = split_by_circle(p);
    return s.inside.is_one() && s.outside.is_one();
}

}  // namespace

FredholmReport fredholm_report(const WHFactorization& fact) {
    const int m = fact.P0.size();
    if (static_cast<int>(fact.Omega_circ.size()) != m)
        throw InvalidFactorization("circle factor count does not match the matrix size");
    if (fact.k < 0) throw InvalidFactorization("negative z-power exponent k");

    FredholmReport rep;
    rep.m = m;
    rep.k = fact.k;

    long sum_q = 0, sum_n = 0;
    for (const RationalFunction& f : fact.Omega_circ) {
        if (f.is_zero() || !roots_only_on_circle(f.num()) || !roots_only_on_circle(f.den()))
            throw InvalidFactorization("circle factor has zeroes or poles off the unit circle");
        rep.q_degrees.push_back(f.den().degree());
        sum_q += f.den().degree();
        if (f.num().degree() > 0) rep.witnesses.push_back(f.num());
    }
    for (int i = 0; i < m; ++i) {
        const Polynomial& d = fact.P0.at(i, i);
        if (d.is_zero() || d.order_at_zero() != d.degree())
            throw InvalidFactorization("P0 diagonal entry is not a power of z");
        for (int j = i + 1; j < m; ++j)
            if (!fact.P0.at(i, j).is_zero()) throw InvalidFactorization("P0 is not lower triangular");
        rep.n_exponents.push_back(d.degree());
        sum_n += d.degree();
    }

    rep.is_fredholm = rep.witnesses.empty();
    if (rep.is_fredholm) rep.index = static_cast<long>(m) * rep.k + sum_q - sum_n;
    return rep;
}

FredholmReport fredholm_of(const RatMatFun& om) {
    auto [fact, trace] = wh_factorize(om);
    (void)trace;
    return fredholm_report(fact);
}

}  // namespace whtk

#pragma once

#include "radix/rational_function.hpp"

namespace radix {

inline std::vector<PolyR> sturm_chain(const PolyR& p)
{
    std::vector<PolyR> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const PolyR& a = chain[chain.size() - 2];
        const PolyR& b = chain.back();
        PolyR r = -(a % b);
        if (!r.is_zero()) {
            /* normalize by a positive constant only; signs matter here */
            Alg l = r.leading();
            if (l.sign() < 0)
                l = -l;
            r = l.inv() * r;
        }
        chain.push_back(r);
    }
    chain.pop_back();
    return chain;
}

inline int sturm_sign_changes(const std::vector<PolyR>& chain, const Alg& x)
{
    int changes = 0, last = 0;
    for (const PolyR& q : chain) {
        if (q.is_zero())
            continue;
        int s = q(x).sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Endpoint roots must be deflated by the caller first.
inline int sturm_root_count(const PolyR& p, const Alg& lo, const Alg& hi)
{
    if (p.is_zero())
        throw domain_error("sturm_root_count: zero polynomial");
    if (!(lo < hi))
        throw domain_error("sturm_root_count: empty interval");
    if (p(lo).sign() == 0 || p(hi).sign() == 0)
        throw domain_error("sturm_root_count: endpoint is a root; deflate first");
    auto chain = sturm_chain(p);
    return sturm_sign_changes(chain, lo) - sturm_sign_changes(chain, hi);
}

}  // namespace radix

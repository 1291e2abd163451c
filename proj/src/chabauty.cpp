#include "chabgraph/chabauty.hpp"

#include <algorithm>

#include "chabgraph/errors.hpp"

namespace chabgraph {

namespace {

bool is_prime(i64 p) {
    if (p < 2) {
        return false;
    }
    for (i64 d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

LocalArithmetic::LocalArithmetic(i64 p_, i64 e_) : p(p_), e(e_) {
    if (!is_prime(p)) {
        throw InputError("p must be prime");
    }
    if (e < 1) {
        throw InputError("ramification index must be positive");
    }
}

i64 vp(i64 n, i64 p) {
    if (n <= 0) {
        throw InputError("vp requires a positive argument");
    }
    if (!is_prime(p)) {
        throw InputError("p must be prime");
    }
    i64 k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

i64 delta(const LocalArithmetic& local, i64 n) {
    if (n < 0) {
        throw InputError("delta requires a non-negative argument");
    }
    const i64 e = local.e;
    const i64 p = local.p;
    const i64 base = checked::mul(e, vp(checked::add(n, 1), p));

    // The defining inequality base + d <= e*vp(n+d+1) fails for every
    // d >= p^K - n - 1 once for all k >= K both
    //   p^k * (p-1) > e            (the slack grows from one power to the next)
    //   base + p^k - n - 1 > e*k   (the slack is already positive)
    // hold, because vp(x) <= floor(log_p(x)).
    i64 power = 1; // p^K
    i64 exponent = 0;
    while (checked::mul(power, p - 1) <= e ||
           checked::add(base, checked::sub(power, checked::add(n, 1))) <= checked::mul(e, exponent)) {
        power = checked::mul(power, p);
        ++exponent;
    }
    const i64 cap = std::max<i64>(0, checked::sub(power, checked::add(n, 1)));

    i64 best = 0; // d = 0 always satisfies the inequality
    for (i64 d = 1; d <= cap; ++d) {
        if (checked::add(base, d) <= checked::mul(e, vp(checked::add(n, d + 1), p))) {
            best = d;
        }
    }
    return best;
}

i64 residue_class_bound(const LocalArithmetic& local, i64 n) {
    return checked::add(checked::add(1, n), delta(local, n));
}

std::string to_string(BoundTheorem t) {
    switch (t) {
    case BoundTheorem::stoll_main:
        return "stoll_main";
    case BoundTheorem::coleman_LT:
        return "coleman_LT";
    case BoundTheorem::general_delta:
        return "general_delta";
    }
    throw InternalError("unreachable theorem tag");
}

ChabautyReport chabauty_bound(const ChabautyInputs& inputs) {
    const i64 g = inputs.g;
    const i64 r = inputs.r;
    const i64 p = inputs.local.p;
    const i64 e = inputs.local.e;
    const i64 n_smooth = inputs.n_smooth;

    if (g < 2) {
        throw InputError("genus must be at least 2");
    }
    if (r < 0) {
        throw InputError("rank must be non-negative");
    }
    if (n_smooth < 0) {
        throw InputError("smooth point count must be non-negative");
    }
    if (r >= g) {
        throw InputError("Chabauty hypothesis fails: rank must be smaller than the genus");
    }

    ChabautyReport report{0, BoundTheorem::stoll_main, {}, std::nullopt};
    report.hypotheses_checked.push_back({"r < g", true});

    struct Candidate {
        BoundTheorem theorem;
        bool pass;
        i64 bound;
    };
    std::vector<Candidate> candidates;

    const bool stoll_ok = p > checked::add(checked::mul(2, r), 2) && e == 1;
    report.hypotheses_checked.push_back({"p > 2r+2 and e = 1", stoll_ok});
    candidates.push_back({BoundTheorem::stoll_main, stoll_ok,
                          stoll_ok ? checked::add(n_smooth, checked::mul(2, r)) : 0});

    const bool coleman_ok = p > checked::sub(checked::add(checked::mul(2, g), e), 1);
    report.hypotheses_checked.push_back({"p > 2g+e-1", coleman_ok});
    candidates.push_back({BoundTheorem::coleman_LT, coleman_ok,
                          coleman_ok ? checked::add(n_smooth, checked::sub(checked::mul(2, g), 2)) : 0});

    const bool delta_ok = e < p - 1;
    report.hypotheses_checked.push_back({"e < p-1", delta_ok});
    if (delta_ok) {
        const i64 two_r = checked::mul(2, r);
        const i64 correction = checked::mul(e, two_r / checked::sub(checked::sub(p, e), 1));
        candidates.push_back({BoundTheorem::general_delta, true,
                              checked::add(checked::add(n_smooth, two_r), correction)});
    } else {
        candidates.push_back({BoundTheorem::general_delta, false, 0});
    }

    bool found = false;
    for (const Candidate& c : candidates) {
        if (!c.pass) {
            continue;
        }
        if (!found || c.bound < report.bound) {
            report.bound = c.bound;
            report.theorem = c.theorem;
            found = true;
        }
    }
    if (!found) {
        throw InputError("no unconditional bound available at these parameters");
    }

    if (inputs.orders) {
        i64 total_order = 0;
        i64 per_class = n_smooth;
        for (const i64 n : *inputs.orders) {
            if (n < 0) {
                throw InputError("vanishing orders must be non-negative");
            }
            total_order = checked::add(total_order, n);
            per_class = checked::add(per_class, checked::add(n, delta(inputs.local, n)));
        }
        const bool orders_ok = total_order <= checked::mul(2, r);
        report.hypotheses_checked.push_back({"sum(orders) <= 2r", orders_ok});
        if (!orders_ok) {
            throw InputError("per-class vanishing orders exceed the Chabauty divisor degree bound 2r");
        }
        report.orders_bound = per_class;
    }

    return report;
}

DeltaAudit delta_property_audit(const LocalArithmetic& local, i64 n_max) {
    const i64 p = local.p;
    const i64 e = local.e;
    DeltaAudit audit{e < p - 1, true, {}};
    for (i64 n = 0; n <= n_max; ++n) {
        const i64 value = delta(local, n);
        const bool zero_forced = p > checked::add(checked::add(n, e), 1);
        audit.rows.push_back({n, value, zero_forced});
        if (zero_forced && value != 0) {
            audit.pass = false;
        }
        if (audit.bounded_claims_checked) {
            const i64 cap = checked::mul(e, n / checked::sub(checked::sub(p, e), 1));
            if (value > cap) {
                audit.pass = false;
            }
        }
    }
    return audit;
}

} // namespace chabgraph

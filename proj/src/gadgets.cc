#include <qreliab/cq.hh>
#include <qreliab/errors.hh>
#include <qreliab/gadgets.hh>
#include <qreliab/kernels.hh>

#include <map>

namespace qreliab {

namespace
{
    void check_rst(int r, int s, int t)
    {
        if (r < 1 || s < 1 || t < 1)
            throw InvalidArgumentError("gadget parameters r, s, t must be positive");
    }

    void add_unary(Instance & out, char prefix, int count, const std::string & element)
    {
        for (int k = 1; k <= count; ++k)
            out.insert({prefix + std::to_string(k), {element}});
    }

    void add_binary(Instance & out, int count, const std::string & from, const std::string & to)
    {
        for (int k = 1; k <= count; ++k)
            out.insert({"S" + std::to_string(k), {from, to}});
    }

    std::vector<Fact> unary_facts(char prefix, int count, const std::string & element)
    {
        std::vector<Fact> facts;
        for (int k = 1; k <= count; ++k)
            facts.push_back({prefix + std::to_string(k), {element}});
        return facts;
    }

    /// Violating worlds of `gadget` with `present` pinned in and `absent` pinned out.
    Count violating_worlds(const Query & query, const Instance & gadget, const std::vector<Fact> & present,
            const std::vector<Fact> & absent)
    {
        std::map<Fact, int> pinned;
        for (auto & f : present)
            pinned[f] = 1;
        for (auto & f : absent)
            pinned[f] = 0;

        std::map<Fact, unsigned> free_index;
        for (auto & fact : gadget)
            if (! pinned.contains(fact))
                free_index.emplace(fact, static_cast<unsigned>(free_index.size()));
        auto n = static_cast<unsigned>(free_index.size());

        std::vector<kernels::Mask> masks;
        for (auto & match : enumerate_matches(query, gadget)) {
            kernels::Mask mask = 0;
            bool possible = true;
            for (auto & fact : match.support) {
                if (auto it = pinned.find(fact); it != pinned.end())
                    possible = possible && it->second == 1;
                else
                    mask |= kernels::Mask{1} << free_index.at(fact);
            }
            if (possible)
                masks.push_back(mask);
        }
        return pow2(n) - kernels::omp::count_covering_subsets(n, masks);
    }
}

Instance build_gadget(GadgetKind kind, int r, int s, int t, std::span<const std::string> endpoints)
{
    check_rst(r, s, t);
    Instance out;
    if (kind == GadgetKind::ab) {
        if (endpoints.size() != 2)
            throw InvalidArgumentError("the (a,b)-gadget takes 2 endpoints, got " + std::to_string(endpoints.size()));
        auto & a = endpoints[0];
        auto & b = endpoints[1];
        add_unary(out, 'R', r, a);
        add_binary(out, s, a, b);
        add_unary(out, 'T', t, b);
        return out;
    }

    if (endpoints.size() != 4)
        throw InvalidArgumentError("the (a,b,c,d)-gadgets take 4 endpoints, got " + std::to_string(endpoints.size()));
    auto & a = endpoints[0];
    auto & b = endpoints[1];
    auto & c = endpoints[2];
    auto & d = endpoints[3];
    bool facts_on_a = kind == GadgetKind::abcd || kind == GadgetKind::abcd_left;
    bool facts_on_d = kind == GadgetKind::abcd || kind == GadgetKind::abcd_right;
    if (facts_on_a)
        add_unary(out, 'R', r, a);
    add_binary(out, s, a, b);
    add_unary(out, 'T', t, b);
    add_binary(out, s, c, b);
    add_unary(out, 'R', r, c);
    add_binary(out, s, c, d);
    if (facts_on_d)
        add_unary(out, 'T', t, d);
    return out;
}

GadgetCounts closed_counts(int r, int s, int t)
{
    check_rst(r, s, t);
    const Count two_r = pow2(r), two_s = pow2(s), two_t = pow2(t);
    const Count two_s_sq = two_s * two_s, two_s_cube = two_s_sq * two_s;
    const Count rm = two_r - 1, sm = two_s - 1, tm = two_t - 1;

    GadgetCounts g;
    g.r = r, g.s = s, g.t = t;
    g.lambda_r = pow2(s + t) - 1;
    g.lambda_t = pow2(s + r) - 1;
    g.lambda_bar_r = pow2(s + t);
    g.lambda_bar_t = pow2(s + r);

    g.gamma = tm * (rm * two_s_cube + two_s_sq * sm) + (rm * two_s_sq * sm + sm * sm * sm);
    Count delta_r_odd = tm * two_r * two_s_sq + (rm * sm * two_s + sm * sm);
    Count delta_t_odd = rm * two_t * two_s_sq + (tm * sm * two_s + sm * sm);
    g.delta_r = two_s * delta_r_odd;
    g.delta_t = two_s * delta_t_odd;
    g.delta_bot = two_s_sq * (pow2(r + s + t) - 1);
    g.kappa = g.delta_r * g.delta_t - g.gamma * g.delta_bot;
    return g;
}

GadgetCounts brute_counts(int r, int s, int t, std::size_t cap)
{
    check_rst(r, s, t);
    auto width = static_cast<std::size_t>(3 * (r + s + t));
    if (width > cap)
        throw CapExceededError("gadget world enumeration", width, cap);

    const Query q = make_qrst(r, s, t);
    const std::string a = "a", b = "b", c = "c", d = "d";
    const std::vector<std::string> ab{a, b}, abcd{a, b, c, d};
    auto r_on_a = unary_facts('R', r, a);
    auto t_on_b = unary_facts('T', t, b);
    auto t_on_d = unary_facts('T', t, d);

    GadgetCounts g;
    g.r = r, g.s = s, g.t = t;
    auto ab_gadget = build_gadget(GadgetKind::ab, r, s, t, ab);
    g.lambda_r = violating_worlds(q, ab_gadget, r_on_a, {});
    g.lambda_bar_r = violating_worlds(q, ab_gadget, {}, r_on_a);
    g.lambda_t = violating_worlds(q, ab_gadget, t_on_b, {});
    g.lambda_bar_t = violating_worlds(q, ab_gadget, {}, t_on_b);

    g.gamma = violating_worlds(q, build_gadget(GadgetKind::abcd, r, s, t, abcd), [&] {
        auto both = r_on_a;
        both.insert(both.end(), t_on_d.begin(), t_on_d.end());
        return both;
    }(), {});
    g.delta_r = violating_worlds(q, build_gadget(GadgetKind::abcd_left, r, s, t, abcd), r_on_a, {});
    g.delta_t = violating_worlds(q, build_gadget(GadgetKind::abcd_right, r, s, t, abcd), t_on_d, {});
    g.delta_bot = violating_worlds(q, build_gadget(GadgetKind::abcd_trimmed, r, s, t, abcd), {}, {});
    g.kappa = g.delta_r * g.delta_t - g.gamma * g.delta_bot;
    return g;
}

Count kappa_closed_form(int r, int s, int t)
{
    return (pow2(r) - 1) * (pow2(t) - 1) * pow2(3 * s);
}

bool LemmaCheck::passed() const
{
    return gamma_odd && delta_r_valuation && delta_t_valuation && delta_bot_valuation && kappa_identity
        && lambda_identities && brute_agrees.value_or(true);
}

bool LemmaReport::all_passed() const
{
    for (auto & c : checks)
        if (! c.passed())
            return false;
    return true;
}

LemmaReport verify_lemmas(int max_r, int max_s, int max_t, std::size_t brute_cap)
{
    if (max_r < 1 || max_s < 1 || max_t < 1)
        throw InvalidArgumentError("identity-check bounds must be at least 1");
    LemmaReport report;
    for (int r = 1; r <= max_r; ++r)
        for (int s = 1; s <= max_s; ++s)
            for (int t = 1; t <= max_t; ++t) {
                auto g = closed_counts(r, s, t);
                auto us = static_cast<unsigned long>(s);
                LemmaCheck check;
                check.r = r, check.s = s, check.t = t;
                check.gamma_odd = mpz_odd_p(g.gamma.get_mpz_t());
                check.delta_r_valuation = g.delta_r != 0 && two_adic_valuation(g.delta_r) == us;
                check.delta_t_valuation = g.delta_t != 0 && two_adic_valuation(g.delta_t) == us;
                check.delta_bot_valuation = g.delta_bot != 0 && two_adic_valuation(g.delta_bot) == 2 * us;
                check.kappa_identity = g.kappa == kappa_closed_form(r, s, t) && g.kappa > 0;
                check.lambda_identities = g.lambda_r + 1 == g.lambda_bar_r && g.lambda_t + 1 == g.lambda_bar_t;
                if (static_cast<std::size_t>(3 * (r + s + t)) <= brute_cap)
                    check.brute_agrees = brute_counts(r, s, t, brute_cap) == g;
                report.checks.push_back(check);
            }
    return report;
}

} // namespace qreliab

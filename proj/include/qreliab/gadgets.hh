#ifndef QRELIAB_GADGETS_HH
#define QRELIAB_GADGETS_HH

#include <qreliab/instance.hh>
#include <qreliab/numeric.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qreliab {

/// ab: R_*(a), S_*(a,b), T_*(b).
/// abcd: R_*(a), S_*(a,b), T_*(b), S_*(c,b), R_*(c), S_*(c,d), T_*(d).
/// The left variant drops the T_*-facts on d, right drops the R_*-facts on
/// a, trimmed drops both.
enum class GadgetKind
{
    ab,
    abcd,
    abcd_left,
    abcd_right,
    abcd_trimmed
};

/// Facts of the gadget over the Q_{r,s,t} relations R1..Rr, S1..Ss, T1..Tt.
/// `endpoints` names a, b (ab) or a, b, c, d (abcd variants).
Instance build_gadget(GadgetKind kind, int r, int s, int t, std::span<const std::string> endpoints);

/// Violating-world counts of the gadgets for fixed (r, s, t).
///
/// lambda_r / lambda_bar_r: ab-gadget with the R_*-facts on a pinned present /
/// absent; lambda_t / lambda_bar_t likewise for the T_*-facts on b.
/// gamma: abcd with R_* on a and T_* on d present; delta_r: R_* on a present,
/// T_* on d absent; delta_t: the converse; delta_bot: both absent.
/// kappa = delta_r * delta_t - gamma * delta_bot.
struct GadgetCounts
{
    int r = 0, s = 0, t = 0;
    Count lambda_r, lambda_bar_r, lambda_t, lambda_bar_t;
    Count gamma, delta_r, delta_t, delta_bot;
    Count kappa;

    bool operator==(const GadgetCounts &) const = default;
};

/// Closed forms from the case analysis over b and c.
GadgetCounts closed_counts(int r, int s, int t);

/// Every count by enumerating gadget worlds under the pinned boundary facts.
/// Requires 3(r+s+t) <= cap.
GadgetCounts brute_counts(int r, int s, int t, std::size_t cap = 30);

/// (2^r - 1)(2^t - 1)(2^s)^3
Count kappa_closed_form(int r, int s, int t);

struct LemmaCheck
{
    int r = 0, s = 0, t = 0;
    bool gamma_odd = false;
    bool delta_r_valuation = false;   // v2(delta_r) = s
    bool delta_t_valuation = false;   // v2(delta_t) = s
    bool delta_bot_valuation = false; // v2(delta_bot) = 2s
    bool kappa_identity = false;      // delta_r delta_t - gamma delta_bot = (2^r-1)(2^t-1)2^(3s)
    bool lambda_identities = false;   // lambda + 1 = lambda_bar on both sides
    std::optional<bool> brute_agrees; // empty when outside the brute cap

    bool passed() const;
};

struct LemmaReport
{
    std::vector<LemmaCheck> checks;
    bool all_passed() const;
};

/// Checks every (r, s, t) in [1, max_r] x [1, max_s] x [1, max_t]. Triples
/// with 3(r+s+t) <= brute_cap are also compared against brute_counts.
/// Failures are reported, never thrown.
LemmaReport verify_lemmas(int max_r, int max_s, int max_t, std::size_t brute_cap = 15);

} // namespace qreliab

#endif // QRELIAB_GADGETS_HH

#pragma once

// Exact ranks of windowed operators, Calkin-quotient comparison, and
// commutant membership certificates.

#include <optional>
#include <string>
#include <vector>

#include <punctured/operator.hpp>

namespace punctured {

enum class RankStatus { Proved, Stable, Growing };
std::string rank_status_name(RankStatus s);

struct RankCertificate {
    std::string operator_name;
    Field field;
    BasisScheme source, target;
    int window = 0;
    // The image of every source index of degree <= window.
    std::vector<std::pair<Index, Combination>> images;
    int rank = 0;
    // Ranks on windows W-3, W-2, W-1, W (negative windows count as rank 0).
    std::vector<int> history;
    bool stable = false;
    // Structural bound carried by the operator, and whether every image on the
    // window was checked to lie in its span.
    std::optional<ImageBound> proof;
    bool proof_checked = false;
    RankStatus status = RankStatus::Growing;

    // Proved upper bound, when a checked structural bound is attached.
    std::optional<int> upper_bound() const;
    // Window rank meets the proved upper bound, so the rank is known exactly.
    bool exact() const;
};

RankCertificate rank_on_window(const WindowedOperator &a, int window);
inline RankCertificate rank_on_window(const WindowedOperator &a) { return rank_on_window(a, a.window()); }

// Recomputes the rank from the stored image vectors with dense elimination.
int recheck_rank(const RankCertificate &c);

enum class CalkinVerdictKind { EquivalentWithRank, DistinctOnWindow, Inconclusive };
std::string calkin_verdict_name(CalkinVerdictKind k);

struct CalkinVerdict {
    CalkinVerdictKind kind = CalkinVerdictKind::Inconclusive;
    int rank = 0;
    RankCertificate certificate;
};

// Verdict for a difference whose certificate has already been computed.
CalkinVerdict calkin_verdict(RankCertificate difference);
// Finite windows never refute finite rank, so DistinctOnWindow is not produced.
CalkinVerdict calkin_equal(const WindowedOperator &a, const WindowedOperator &b, int window);

struct MembershipReport {
    std::vector<std::string> generators;
    std::vector<RankCertificate> certificates; // one per generator, for [phi, R_s]
    bool member = false;
};

// phi commutes with right multiplication by every generator modulo finite
// rank. Checking generators suffices since
// [phi, R_ab] = [phi, R_b] R_a + R_b [phi, R_a].
MembershipReport h0_membership(const WindowedOperator &phi, const std::vector<WindowedOperator> &generators, int window);

} // namespace punctured

#include <punctured/rank.hpp>

#include <algorithm>
#include <map>

#include <punctured/linalg.hpp>

namespace punctured {

std::string rank_status_name(RankStatus s)
{
    switch (s) {
        case RankStatus::Proved: return "proved";
        case RankStatus::Stable: return "stable";
        case RankStatus::Growing: return "growing";
    }
    return "?";
}

std::string calkin_verdict_name(CalkinVerdictKind k)
{
    switch (k) {
        case CalkinVerdictKind::EquivalentWithRank: return "equivalent";
        case CalkinVerdictKind::DistinctOnWindow: return "distinct";
        case CalkinVerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<int> RankCertificate::upper_bound() const
{
    if (!proof || !proof_checked) return std::nullopt;
    return static_cast<int>(proof->span.size());
}

bool RankCertificate::exact() const
{
    auto ub = upper_bound();
    return ub && *ub == rank;
}

RankCertificate rank_on_window(const WindowedOperator &a, int window)
{
    if (window > a.window()) {
        throw Error(ErrorKind::WindowExceeded,
                    "rank of " + a.name() + " on window " + std::to_string(window) + " beyond its window " + std::to_string(a.window()));
    }
    if (window < 0) throw Error(ErrorKind::WindowExceeded, "negative window");
    RankCertificate cert;
    cert.operator_name = a.name();
    cert.field = a.field();
    cert.source = a.source();
    cert.target = a.target();
    cert.window = window;
    cert.proof = a.image_bound();
    cert.images = a.tabulate(window);

    IncrementalEchelon ech(a.field());
    std::map<Index, int> column;
    std::map<int, int> rank_at; // degree -> rank after all indices of that degree
    for (const auto &[b, img] : cert.images) {
        SparseRow row;
        for (const auto &[t, c] : img.terms()) {
            auto [it, inserted] = column.try_emplace(t, static_cast<int>(column.size()));
            row.emplace(it->second, c);
        }
        if (!row.empty()) ech.insert(row);
        rank_at[a.source().degree(b)] = ech.rank();
    }
    cert.rank = ech.rank();
    for (int w = window - 3; w <= window; ++w) cert.history.push_back(w < 0 ? 0 : rank_at.at(w));
    cert.stable = std::all_of(cert.history.begin(), cert.history.end(), [&](int r) { return r == cert.rank; });

    if (cert.proof) {
        cert.proof_checked = true;
        for (const auto &[b, img] : cert.images) {
            for (const auto &[t, c] : img.terms()) {
                if (std::find(cert.proof->span.begin(), cert.proof->span.end(), t) == cert.proof->span.end()) cert.proof_checked = false;
            }
        }
    }
    if (cert.proof_checked) cert.status = RankStatus::Proved;
    else cert.status = cert.stable ? RankStatus::Stable : RankStatus::Growing;
    return cert;
}

int recheck_rank(const RankCertificate &c)
{
    std::map<Index, std::size_t> column;
    for (const auto &[b, img] : c.images)
        for (const auto &[t, x] : img.terms()) column.try_emplace(t, column.size());
    if (column.empty()) return 0;
    DenseMatrix m;
    for (const auto &[b, img] : c.images) {
        std::vector<FieldValue> row(column.size(), c.field.zero());
        for (const auto &[t, x] : img.terms()) row[column.at(t)] = x;
        m.push_back(std::move(row));
    }
    DenseMatrix copy = m;
    return static_cast<int>(rref(copy).size());
}

CalkinVerdict calkin_equal(const WindowedOperator &a, const WindowedOperator &b, int window)
{
    return calkin_verdict(rank_on_window(a - b, window));
}

CalkinVerdict calkin_verdict(RankCertificate difference)
{
    CalkinVerdict v;
    v.certificate = std::move(difference);
    v.rank = v.certificate.rank;
    v.kind = (v.certificate.stable || v.certificate.status == RankStatus::Proved) ? CalkinVerdictKind::EquivalentWithRank
                                                                                 : CalkinVerdictKind::Inconclusive;
    return v;
}

MembershipReport h0_membership(const WindowedOperator &phi, const std::vector<WindowedOperator> &generators, int window)
{
    MembershipReport r;
    r.member = true;
    for (const auto &g : generators) {
        const WindowedOperator c = commutator(phi, g);
        r.generators.push_back(g.name());
        r.certificates.push_back(rank_on_window(c, window));
        const auto &cert = r.certificates.back();
        if (!(cert.stable || cert.status == RankStatus::Proved)) r.member = false;
    }
    return r;
}

} // namespace punctured

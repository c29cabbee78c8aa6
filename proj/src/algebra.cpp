#include "pairabs/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace pairabs {

const char* to_string(Statistics s) { return s == Statistics::boson ? "boson" : "fermion"; }

MissingOverlapError::MissingOverlapError(const CmLabel& x, const CmLabel& y)
    : std::out_of_range("overlap <" + x.str() + "|" + y.str() + "> is not in the table") {}

void OverlapTable::set(const CmLabel& x, const CmLabel& y, Amplitude value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::invalid_argument("overlap <" + x.str() + "|" + y.str() + "> is not finite");
    if (std::abs(value) > 1.0 + 1e-12)
        throw std::invalid_argument("overlap <" + x.str() + "|" + y.str() + "> exceeds 1 in modulus");
    if (x == y) {
        if (value != Amplitude{1.0})
            throw std::invalid_argument("diagonal overlap <" + x.str() + "|" + x.str() + "> must be 1");
        labels_.insert(x);
        return;
    }
    entries_[{x, y}] = value;
    entries_[{y, x}] = std::conj(value);
    labels_.insert(x);
    labels_.insert(y);
}

Amplitude OverlapTable::get(const CmLabel& x, const CmLabel& y) const {
    if (x == y) return 1.0;
    auto it = entries_.find({x, y});
    if (it == entries_.end()) throw MissingOverlapError(x, y);
    return it->second;
}

bool OverlapTable::contains(const CmLabel& x, const CmLabel& y) const {
    return x == y || entries_.contains({x, y});
}

std::vector<CmLabel> OverlapTable::unstarred_labels() const {
    std::vector<CmLabel> out;
    for (const auto& l : labels_)
        if (!l.starred) out.push_back(l);
    return out;
}

FormalState FormalState::scaled(Amplitude w) const {
    FormalState out = *this;
    for (auto& t : out.terms_) t.weight *= w;
    return out;
}

FormalState FormalState::swapped_slots() const {
    FormalState out;
    for (const auto& t : terms_) out.add({t.weight, t.cm2, t.int2, t.cm1, t.int1});
    return out;
}

FormalState FormalState::pruned() const {
    FormalState out;
    for (const auto& t : terms_)
        if (t.weight != Amplitude{0.0}) out.add(t);
    return out;
}

Amplitude inner_product(const FormalState& bra, const FormalState& ket, const OverlapTable& table) {
    Amplitude sum{0.0};
    for (const auto& b : bra.terms()) {
        for (const auto& k : ket.terms()) {
            if (b.int1 != k.int1 || b.int2 != k.int2) continue;
            sum += std::conj(b.weight) * k.weight * table.get(b.cm1, k.cm1) * table.get(b.cm2, k.cm2);
        }
    }
    return sum;
}

FormalState symmetrize(const CmLabel& cm_a, Internal int_a, const CmLabel& cm_b, Internal int_b,
                       Statistics stats) {
    return FormalState({{1.0, cm_a, int_a, cm_b, int_b}, {sign_of(stats), cm_b, int_b, cm_a, int_a}});
}

FormalState combine(const std::vector<std::pair<Amplitude, FormalState>>& states) {
    FormalState out;
    for (const auto& [w, s] : states)
        for (const auto& t : s.terms()) out.add({w * t.weight, t.cm1, t.int1, t.cm2, t.int2});
    return out;
}

GramReport validate_gram(const OverlapTable& table, const std::vector<CmLabel>& labels) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXcd gram(n, n);
    bool starred = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        starred = starred || labels[i].starred;
        for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = table.get(labels[i], labels[j]);
    }

    GramReport report;
    if (n == 0) {
        report.realizable = true;
        report.message = "empty label set";
        return report;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.realizable = report.min_eigenvalue >= kGramTolerance;
    if (report.realizable) {
        report.message = "Gram matrix is positive semidefinite";
    } else {
        report.warning = starred;
        report.message = "Gram matrix has negative eigenvalue " + std::to_string(report.min_eigenvalue);
        if (starred) report.message += " (recoiled labels included)";
    }
    return report;
}

GramReport validate_gram(const OverlapTable& table) {
    std::vector<CmLabel> selected;
    for (const auto& l : table.unstarred_labels()) {
        const bool complete = std::all_of(selected.begin(), selected.end(),
                                          [&](const CmLabel& s) { return table.contains(s, l); });
        if (complete) selected.push_back(l);
    }
    return validate_gram(table, selected);
}

}  // namespace pairabs

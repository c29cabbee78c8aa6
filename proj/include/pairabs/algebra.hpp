// Formal two-particle state algebra over labeled, non-orthogonal
// one-particle center-of-mass states.
//
// All inner products are resolved through an OverlapTable; no vector
// embedding of the states is ever built. Internal (electronic) states are
// the orthonormal pair {g, e} and never enter the table.

#pragma once

#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pairabs {

using Amplitude = std::complex<double>;

/// Center-of-mass state label. `starred` marks the recoiled version.
struct CmLabel {
    std::string name;
    bool starred = false;

    CmLabel star() const { return {name, true}; }
    CmLabel unstar() const { return {name, false}; }
    std::string str() const { return starred ? name + "*" : name; }

    auto operator<=>(const CmLabel&) const = default;
};

namespace labels {
inline const CmLabel psi{"psi"};
inline const CmLabel phi{"phi"};
inline const CmLabel varphi{"varphi"};
inline const CmLabel chi{"chi"};
inline const CmLabel zeta{"zeta"};
inline const CmLabel varphi_perp{"varphi_perp"};
inline const CmLabel eta{"eta"};
inline const CmLabel mu{"mu"};
}  // namespace labels

enum class Internal { g, e };

/// Exchange statistics of the pair; the value is the sign of the exchange term.
enum class Statistics : int { boson = +1, fermion = -1 };

inline double sign_of(Statistics s) { return s == Statistics::boson ? 1.0 : -1.0; }
const char* to_string(Statistics s);

class MissingOverlapError : public std::out_of_range {
public:
    MissingOverlapError(const CmLabel& x, const CmLabel& y);
};

/// Hermitian table of CM inner products <x|y>.
///
/// Setting <x|y> stores the conjugate mirror <y|x> as well, so Hermiticity
/// holds bit-exactly. The diagonal is implicitly 1.
class OverlapTable {
public:
    void set(const CmLabel& x, const CmLabel& y, Amplitude value);
    void add_label(const CmLabel& x) { labels_.insert(x); }

    Amplitude get(const CmLabel& x, const CmLabel& y) const;
    bool contains(const CmLabel& x, const CmLabel& y) const;

    const std::set<CmLabel>& labels() const { return labels_; }
    std::vector<CmLabel> unstarred_labels() const;

private:
    std::map<std::pair<CmLabel, CmLabel>, Amplitude> entries_;
    std::set<CmLabel> labels_;
};

inline Amplitude get_overlap(const OverlapTable& table, const CmLabel& x, const CmLabel& y) {
    return table.get(x, y);
}

/// One tensor monomial weight * |cm1>|int1> (x) |cm2>|int2>.
struct Term {
    Amplitude weight;
    CmLabel cm1;
    Internal int1;
    CmLabel cm2;
    Internal int2;
};

class FormalState {
public:
    FormalState() = default;
    explicit FormalState(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(Term t) { terms_.push_back(std::move(t)); }
    FormalState scaled(Amplitude w) const;
    /// Exchanges particle slots 1 and 2 in every term.
    FormalState swapped_slots() const;
    /// Drops terms whose weight is exactly zero.
    FormalState pruned() const;

private:
    std::vector<Term> terms_;
};

/// <bra|ket>, summed over term pairs in index order (bra outer, ket inner).
Amplitude inner_product(const FormalState& bra, const FormalState& ket, const OverlapTable& table);

/// |a>_1|b>_2 + sign |b>_1|a>_2, unnormalized.
FormalState symmetrize(const CmLabel& cm_a, Internal int_a, const CmLabel& cm_b, Internal int_b,
                       Statistics stats);

/// Weighted concatenation sum_k w_k |s_k>.
FormalState combine(const std::vector<std::pair<Amplitude, FormalState>>& states);

struct GramReport {
    bool realizable = false;
    double min_eigenvalue = 0.0;
    /// Set when the check covers starred labels and fails: the recoil
    /// parametrization need not be Gram-realizable, so this is not an error.
    bool warning = false;
    std::string message;
};

inline constexpr double kGramTolerance = -1e-12;

/// Positive-semidefiniteness of the Gram matrix of `labels`: the labels are
/// realizable as actual unit vectors iff the smallest eigenvalue is >= -1e-12.
GramReport validate_gram(const OverlapTable& table, const std::vector<CmLabel>& labels);

/// Checks the unstarred labels of the table. Labels are taken in table order
/// and one that lacks an overlap with an already-selected label is skipped
/// (the product-reference labels, for instance).
GramReport validate_gram(const OverlapTable& table);

}  // namespace pairabs

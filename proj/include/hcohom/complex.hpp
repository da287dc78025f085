#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcohom/linalg.hpp"

namespace hcohom {

/// Cochain complex truncated at degree top(). d[n] maps degree n to degree
/// n+1; the last differential d[top] maps into an outer space that carries no
/// further structure (only its kernel is used).
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> d;

    std::size_t top() const { return dims.size() - 1; }
    /// Shapes agree and d[n+1] d[n] = 0 wherever both exist.
    void check() const;

    /// Subcomplex on the given subspaces of the parent's spaces, in the RREF
    /// coordinates of each subspace. The top differential keeps the parent's
    /// outer space. ContainmentError if a subspace is not stable.
    static CochainComplex restrict(const CochainComplex& parent, const std::vector<Subspace>& subspaces);
};

/// Degree-n cohomology of a complex with canonical representatives.
class Cohomology {
public:
    Cohomology(const CochainComplex& c, std::size_t n);

    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return representatives_.size(); }
    std::size_t dim_cocycles() const { return cocycles_.dim(); }
    std::size_t dim_coboundaries() const { return coboundaries_.dim(); }
    const Subspace& cocycles() const { return cocycles_; }
    const Subspace& coboundaries() const { return coboundaries_; }
    const std::vector<SparseVec>& representatives() const { return representatives_; }

    /// Coordinates of the class of a cocycle in the representative basis.
    /// ContainmentError if v is not a cocycle.
    SparseVec class_of(const SparseVec& v) const;
    bool is_coboundary(const SparseVec& v) const { return coboundaries_.contains(v); }

private:
    std::size_t degree_;
    Subspace cocycles_;
    Subspace coboundaries_;
    std::vector<SparseVec> representatives_;
    std::optional<LinearSolver> solver_;  // columns: coboundary basis, then representatives
};

std::vector<Cohomology> all_cohomology(const CochainComplex& c);
std::vector<std::size_t> cohomology_dims(const std::vector<Cohomology>& h);

/// Checks target.d[n] f[n] = f[n+1] source.d[n] wherever both sides exist.
void check_chain_map(const CochainComplex& source, const CochainComplex& target, const std::vector<Matrix>& f);

/// Matrix of H^n(f) in representative bases (rows: target classes).
Matrix induced_map(const Cohomology& source, const Cohomology& target, const Matrix& f_n);

/// 0 -> sub --i--> mid --p--> quo -> 0, degreewise.
struct ComplexSES {
    CochainComplex sub;
    CochainComplex mid;
    CochainComplex quo;
    std::vector<Matrix> i;
    std::vector<Matrix> p;

    /// ExactnessError for degreewise failures, ChainMapError for squares.
    void check() const;
};

/// Connecting map H^n(quo) -> H^{n+1}(sub). Requires n + 1 <= top.
Matrix connecting_map(const ComplexSES& ses, const Cohomology& quo_n, const Cohomology& sub_n1, std::size_t n);

struct SequenceNode {
    std::string name;
    std::size_t dim = 0;
};

/// A map in a long sequence; absent maps end the checkable range.
struct SequenceMap {
    std::string name;
    std::optional<Matrix> matrix;
};

struct ExactnessReport {
    std::vector<SequenceNode> nodes;
    std::vector<std::string> maps;
    /// defect[k] = dim(ker out / (im in ∩ ker out)) + dim(im in / (im in ∩ ker out)),
    /// nullopt where a neighbouring map is unavailable.
    std::vector<std::optional<std::size_t>> defects;

    bool exact() const;
    std::size_t checked_nodes() const;
};

/// maps[k] goes from nodes[k] to nodes[k+1]; the sequence starts with 0 ->.
ExactnessReport exactness(const std::vector<SequenceNode>& nodes, const std::vector<SequenceMap>& maps);

/// Defect of A --f--> B --g--> C at B.
std::size_t exactness_defect(const Matrix& f, const Matrix& g);

/// The long cohomology sequence of a SES, through H^max_n(quo).
ExactnessReport long_exact_sequence(const ComplexSES& ses, std::size_t max_n);

}  // namespace hcohom

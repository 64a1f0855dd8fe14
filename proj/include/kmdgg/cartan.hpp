#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmdgg {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Matrix = std::vector<Vec>;

struct NotGCM : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAffine : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAutomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownNode : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Generalized Cartan matrix. Entry a(i, j) is the pairing of the i-th simple
// coroot with the j-th simple root; rows and columns are node positions.
class Gcm {
public:
    static Gcm validate(Matrix matrix, std::vector<int> nodes = {});

    int size() const { return static_cast<int>(a_.size()); }
    Int a(int i, int j) const { return a_[i][j]; }
    const Matrix& matrix() const { return a_; }
    const std::vector<int>& nodes() const { return nodes_; }
    const std::optional<Vec>& symmetrizer() const { return sym_; }

    int position(int node) const;
    int node(int position) const { return nodes_.at(position); }

    // Simple root alpha_j written in fundamental-weight coordinates.
    Vec root_weight(int j) const;

    bool operator==(const Gcm& o) const { return a_ == o.a_ && nodes_ == o.nodes_; }

private:
    Matrix a_;
    std::vector<int> nodes_;
    std::optional<Vec> sym_;
};

std::optional<Vec> symmetrizer(const Matrix& a);

// Nonnegative integer basis of {k : sum_i k_i a_ij = 0 for all j}.
std::vector<Vec> center_basis(const Gcm& gcm);
Vec canonical_K(const Gcm& gcm);

// Finite Cartan matrices on nodes 1..n, and untwisted affinizations with the
// extra node 0 in position 0. Names look like "A3", "C2~", "E6~", "G2".
Gcm finite_type(char family, int rank);
Gcm affine_type(char family, int rank);
Gcm named_gcm(const std::string& name);

// Highest root of a finite type in simple-root coordinates.
Vec highest_root(const Gcm& finite);

Int pairing(const Vec& coroot, const Vec& weight);

// Weight with coordinates all one: the sum of fundamental weights.
Vec rho(const Gcm& gcm);
Vec fundamental_weight(const Gcm& gcm, int i);

struct FoldingData {
    Gcm source;
    std::vector<int> pi;                   // positions of source
    std::vector<std::vector<int>> orbits;  // indexed by folded position
    std::vector<int> orbit_of;             // source position -> folded position
    std::vector<Int> orbit_size;
    Int kappa = 1;
    Gcm folded;
};

FoldingData fold(const Gcm& source, const std::vector<int>& pi);

// Weight and coroot transport from the folded matrix to the source.
Vec psi(const FoldingData& fd, const Vec& weight);
Vec phi(const FoldingData& fd, const Vec& coroot);

}  // namespace kmdgg

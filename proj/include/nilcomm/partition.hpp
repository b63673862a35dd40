#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nilcomm {

/// Integer partition with weakly decreasing positive parts. Indexes the
/// nilpotent GL_n-orbits via Jordan block sizes; the empty partition (n = 0)
/// is allowed.
class Partition {
public:
    Partition() = default;
    /// Parts are sorted descending on construction; zero/negative parts rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses a comma-joined part list, e.g. "4,3,1,1". Empty string -> empty partition.
    static Partition parse(const std::string& csv);
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Multiplicity a_i = number of parts equal to i.
    int multiplicity(int i) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Conjugate partition (Young diagram flip).
Partition transpose(const Partition& lambda);

/// dim z_{gl_n}(e) for e of Jordan type lambda: the sum of squares of the
/// parts of the conjugate partition.
long centralizer_dim(const Partition& lambda);

/// n^2 - centralizer_dim.
long orbit_dim(const Partition& lambda);

/// Dominance order: partial sums of lambda weakly exceed those of mu.
/// Both arguments must partition the same n.
bool dominates(const Partition& lambda, const Partition& mu);

/// All partitions of n (parts <= max_part when given) in descending
/// lexicographic order.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part = std::nullopt);

}  // namespace nilcomm

#ifndef HYPERLAB_PARTITION_HPP
#define HYPERLAB_PARTITION_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlab {

// Integer partition stored as a non-increasing list of positive parts.
// Equality is equality of the sorted parts, i.e. of the multiset.
class Partition {
public:
    // Throws EmptyPartition / NonPositivePart.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    int part_count() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.front(); }
    int smallest() const noexcept { return parts_.back(); }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

Partition parse_partition(std::span<const int> values);
// Comma separated form, e.g. "3,1".
Partition parse_partition(std::string_view text);

std::string to_string(const Partition& sigma);

// Decrements the part at 1-based index i, dropping it if it reaches zero.
Partition delete_one(const Partition& sigma, int i);

bool is_rectangular(const Partition& sigma);
bool is_symmetric(const Partition& sigma);

// All partitions of r, largest-first (reverse lexicographic). 1 <= r <= 25.
std::vector<Partition> enumerate_partitions(int r);

/* The rectangular partition of total()+1 obtained by adding a single cell to
 * sigma, if there is one. For r >= 2 this exists exactly when sigma has the
 * shape (D,...,D,D-1), counting (r) as D = r+1 and (1,...,1) as D = 1 with
 * the trailing zero part dropped.
 */
std::optional<Partition> rectangular_completion(const Partition& sigma);

}  // namespace hyperlab

#endif  // HYPERLAB_PARTITION_HPP

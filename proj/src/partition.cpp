#include <hyperlab/partition.hpp>

#include <hyperlab/error.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hyperlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::EmptyPartition, "partition has no parts");
    for (int p : parts_)
        if (p < 1) throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(p) + " is not positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition parse_partition(std::span<const int> values) {
    return Partition(std::vector<int>(values.begin(), values.end()));
}

Partition parse_partition(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (field.empty()) {
            if (text.empty()) break;
            throw Error(ErrorCode::ParseError, "empty field in partition '" + std::string(text) + "'");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size())
            throw Error(ErrorCode::ParseError, "bad integer '" + std::string(field) + "' in partition");
        values.push_back(value);
        pos = comma + 1;
    }
    return parse_partition(std::span<const int>(values));
}

std::string to_string(const Partition& sigma) {
    std::string out;
    for (std::size_t i = 0; i < sigma.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sigma.parts()[i]);
    }
    return out;
}

Partition delete_one(const Partition& sigma, int i) {
    if (i < 1 || i > sigma.part_count())
        throw Error(ErrorCode::IndexOutOfRange,
                    "part index " + std::to_string(i) + " not in [1, " + std::to_string(sigma.part_count()) + "]");
    std::vector<int> parts = sigma.parts();
    auto& part = parts[static_cast<std::size_t>(i - 1)];
    if (--part == 0) parts.erase(parts.begin() + (i - 1));
    if (parts.empty()) throw Error(ErrorCode::EmptyPartition, "deleting from (1) leaves the empty partition");
    return Partition(std::move(parts));
}

bool is_rectangular(const Partition& sigma) {
    return sigma.largest() == sigma.smallest();
}

bool is_symmetric(const Partition& sigma) {
    // (1) has no partition of 0 to compare; every deletion is trivially alike.
    if (sigma.total() == 1) return true;
    const Partition first = delete_one(sigma, 1);
    for (int i = 2; i <= sigma.part_count(); ++i)
        if (delete_one(sigma, i) != first) return false;
    return true;
}

std::vector<Partition> enumerate_partitions(int r) {
    if (r < 1 || r > 25)
        throw Error(ErrorCode::ROutOfRange, "r must be in [1, 25], got " + std::to_string(r));
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(r, r);
    return out;
}

std::optional<Partition> rectangular_completion(const Partition& sigma) {
    std::vector<int> grown = sigma.parts();
    grown.back() += 1;
    Partition bumped(grown);
    if (is_rectangular(bumped)) return bumped;

    if (sigma.largest() == 1) {
        std::vector<int> ones(sigma.parts());
        ones.push_back(1);
        return Partition(std::move(ones));
    }
    return std::nullopt;
}

}  // namespace hyperlab

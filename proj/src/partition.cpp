#include "qvertex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: '" + text + "'");
        }
        if (used != item.size() || v < 0) throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(v);
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed partition: '" + text + "'");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

int Partition::kappa() const {
    int k = 0;
    for (int i = 0; i < length(); ++i) k += part(i) * (part(i) - 2 * (i + 1) + 1);
    return k;
}

std::vector<int> Partition::hooks() const {
    Partition c = conjugate();
    std::vector<int> h;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < part(i); ++j) h.push_back(part(i) + c.part(j) - i - j - 1);
    return h;
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < part(i); ++j) out.push_back(j - i);
    return out;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.part(i);
    return os.str();
}

namespace {

void fill_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        fill_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

void fill_sub(const Partition& mu, int row, int bound, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (row == mu.length() || bound == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 0; p <= std::min(bound, mu.part(row)); ++p) {
        if (p == 0) {
            out.emplace_back(prefix);
            continue;
        }
        prefix.push_back(p);
        fill_sub(mu, row + 1, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto block = partitions_of(n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    fill_sub(mu, 0, mu.part(0), prefix, out);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    });
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h ^= static_cast<std::size_t>(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
}

}  // namespace qvertex

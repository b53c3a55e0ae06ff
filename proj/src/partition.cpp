#include "qtsym/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qtsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::single(int n) {
    if (n < 0) throw std::invalid_argument("Partition::single: negative");
    if (n == 0) return Partition();
    return Partition({n});
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_[0]) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
}

unsigned long Partition::z() const {
    unsigned long z = 1;
    auto m = multiplicities();
    for (std::size_t v = 1; v < m.size(); ++v) {
        for (int j = 0; j < m[v]; ++j) z *= v;
        for (int j = 2; j <= m[v]; ++j) z *= static_cast<unsigned long>(j);
    }
    return z;
}

long Partition::n_stat() const {
    long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        s += static_cast<long>(i) * parts_[i];
    return s;
}

std::vector<Partition::Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int row = 0; row < length(); ++row)
        for (int col = 0; col < parts_[static_cast<std::size_t>(row)]; ++col)
            out.push_back({col, row});
    return out;
}

int Partition::leg(const Cell& c) const {
    int n = 0;
    for (int row = c.coleg + 1; row < length(); ++row)
        if (parts_[static_cast<std::size_t>(row)] > c.coarm) ++n;
    return n;
}

bool Partition::dominated_by(const Partition& o) const {
    if (size() != o.size()) return false;
    int sa = 0, sb = 0;
    int len = std::max(length(), o.length());
    for (int i = 0; i < len; ++i) {
        sa += part(i);
        sb += o.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool Partition::contained_as_multiset(const Partition& o) const {
    auto ma = multiplicities();
    auto mb = o.multiplicities();
    if (ma.size() > mb.size()) return false;
    for (std::size_t v = 1; v < ma.size(); ++v)
        if (ma[v] > mb[v]) return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    int sa = size(), sb = o.size();
    if (sa != sb) return sa < sb;
    return parts_ > o.parts_;  // lex descending within a size
}

std::string Partition::dotted() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::dashed() const {
    std::string s = dotted();
    std::replace(s.begin(), s.end(), '.', '-');
    return s;
}

std::string Partition::bracketed() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition Partition::parse_dotted(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('.', pos);
        if (next == std::string::npos) next = s.size();
        parts.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    if (n >= 0) {
        std::vector<int> cur;
        gen_partitions(n, n == 0 ? 1 : n, cur, out);
    }
    return cache.emplace(n, std::move(out)).first->second;
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace qtsym

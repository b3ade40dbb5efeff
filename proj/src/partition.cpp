#include "tv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("parts must be weakly decreasing and positive");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        std::istringstream t(tok);
        int v;
        while (t >> v) parts.push_back(v);
        if (!t.eof() && t.fail()) {
            t.clear();
            std::string junk;
            t >> junk;
            if (!junk.empty()) throw std::invalid_argument("bad partition token: " + tok);
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) c[j]++;
    }
    return Partition(std::move(c));
}

long Partition::kappa() const {
    long k = 0;
    for (int i = 1; i <= length(); ++i) {
        long p = parts_[i - 1];
        k += p * (p - 2 * i + 1);
    }
    return k;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

static void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

static void gen_sub(const Partition& lam, int row, int prev, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (row > lam.length()) {
        out.emplace_back(cur);
        return;
    }
    int hi = std::min(prev, lam.part(row));
    // part 0 terminates the subpartition (later rows can only be 0 too)
    out.emplace_back(cur);
    for (int p = 1; p <= hi; ++p) {
        cur.push_back(p);
        gen_sub(lam, row + 1, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (lam.empty()) {
        out.emplace_back();
        return out;
    }
    // enumerate row by row; cutting off at any row yields a valid diagram
    gen_sub(lam, 1, lam.part(1), cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition intersect(const Partition& a, const Partition& b) {
    std::vector<int> c;
    int n = std::min(a.length(), b.length());
    for (int i = 1; i <= n; ++i) c.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(c));
}

}  // namespace tv

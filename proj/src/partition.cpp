#include "nilcomm/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> t;
    for (int row = 1; row <= lambda.max_part(); ++row) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= row) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

long centralizer_dim(const Partition& lambda) {
    const Partition conj = transpose(lambda);
    long dim = 0;
    for (int p : conj.parts()) dim += static_cast<long>(p) * p;
    return dim;
}

long orbit_dim(const Partition& lambda) {
    const long n = lambda.n();
    return n * n - centralizer_dim(lambda);
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("dominance: unequal partition sizes");
    long sl = 0, sm = 0;
    const std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        sl += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        sm += i < mu.parts().size() ? mu.parts()[i] : 0;
        if (sl < sm) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    const int cap0 = std::max(0, std::min(n, max_part.value_or(n)));
    std::vector<Partition> result;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, cap0);
    return result;
}

}  // namespace nilcomm

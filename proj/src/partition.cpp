#include "spst/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spst/errors.hpp"

namespace spst {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

std::optional<Partition> Partition::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        if (tok.empty()) return std::nullopt;
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') return std::nullopt;
            value = value * 10 + (c - '0');
            if (value > 1'000'000) return std::nullopt;
        }
        parts.push_back(value);
        body = (comma == std::string_view::npos) ? std::string_view{} : body.substr(comma + 1);
        if (comma != std::string_view::npos && body.empty()) return std::nullopt;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Partition transpose(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(p.part(0)));
    for (int j = 1; j <= p.part(0); ++j) {
        int count = 0;
        while (count < p.length() && p.part(count) >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    int rows = std::max(outer.length(), inner.length());
    for (int i = 0; i < rows; ++i) {
        if (inner.part(i) > outer.part(i)) return false;
        if (outer.part(i + 1) > inner.part(i)) return false;
    }
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    int rows = std::max(outer.length(), inner.length());
    for (int i = 0; i < rows; ++i) {
        int diff = outer.part(i) - inner.part(i);
        if (diff < 0 || diff > 1) return false;
    }
    return true;
}

Partition pad(const Partition& nu, int t) {
    if (t < nu.part(0) + nu.size())
        throw PadTooSmallError("pad: t = " + std::to_string(t) + " < nu_1 + |nu| = " +
                               std::to_string(nu.part(0) + nu.size()) + " for nu = " +
                               nu.to_string());
    int head = t - nu.size();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(nu.length()) + 1);
    if (head > 0) parts.push_back(head);
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition(std::move(parts));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        generate(remaining - k, k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, current, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

std::vector<Partition> partitions_up_to(int cap) {
    std::vector<Partition> out;
    for (int n = 0; n <= cap; ++n) {
        auto block = partitions_of(n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Partition stretch(const Partition& p, int factor) {
    if (factor < 1) throw std::invalid_argument("stretch: factor must be >= 1");
    std::vector<int> parts = p.parts();
    for (int& part : parts) part *= factor;
    return Partition(std::move(parts));
}

bool canon_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // reverse-lex within a grade: a comes first when it is lex-greater
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

}  // namespace spst

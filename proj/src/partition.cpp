#include "hilbpieri/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hilbpieri/checked.hpp"

namespace hilb {

namespace {

void validate(const std::vector<int>& parts)
{
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 0)
            throw std::invalid_argument("partition entry is negative");
        if (k + 1 < parts.size() && parts[k] < parts[k + 1])
            throw std::invalid_argument("partition entries are not weakly decreasing");
    }
}

// Multiplicity of each value 0..max in p (index = value).
std::vector<int> value_counts(const Partition& p, int max_value)
{
    std::vector<int> counts(static_cast<std::size_t>(max_value) + 1, 0);
    for (int v : p.entries())
        ++counts[static_cast<std::size_t>(v)];
    return counts;
}

// Enumerates, per positive value block of m, how many entries of that block
// lose one. Each choice vector yields a distinct result.
void choose_blocks(const std::vector<int>& counts, std::size_t value, std::size_t remaining,
                   std::vector<int>& take, const std::function<void()>& emit)
{
    if (value == 0) {
        if (remaining == 0)
            emit();
        return;
    }
    const auto available = static_cast<std::size_t>(counts[value]);
    for (std::size_t k = 0; k <= std::min(available, remaining); ++k) {
        take[value] = static_cast<int>(k);
        choose_blocks(counts, value - 1, remaining - k, take, emit);
    }
    take[value] = 0;
}

std::vector<Partition> subtract_blocks(const Partition& m, std::size_t j, int forced_value)
{
    if (m.empty())
        return j == 0 ? std::vector<Partition>{m} : std::vector<Partition>{};
    const int top = m.row(1);
    const auto counts = value_counts(m, top);
    std::vector<int> take(counts.size(), 0);
    std::vector<Partition> out;
    choose_blocks(counts, static_cast<std::size_t>(top), j, take, [&] {
        if (forced_value > 0 && take[static_cast<std::size_t>(forced_value)] == 0)
            return;
        std::vector<int> parts;
        parts.reserve(m.size());
        for (std::size_t v = 0; v < counts.size(); ++v) {
            for (int n = 0; n < counts[v]; ++n) {
                const bool hit = v > 0 && n < take[v];
                parts.push_back(static_cast<int>(v) - (hit ? 1 : 0));
            }
        }
        out.push_back(Partition::sort_desc(std::move(parts)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Partition::Partition(std::initializer_list<int> entries) : Partition(std::vector<int>(entries)) {}

Partition::Partition(std::vector<int> entries) : parts_(std::move(entries))
{
    validate(parts_);
}

Partition Partition::sort_desc(std::vector<int> seq)
{
    if (std::any_of(seq.begin(), seq.end(), [](int v) { return v < 0; }))
        throw std::invalid_argument("partition entry is negative");
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return Partition(std::move(seq));
}

int Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::size_t Partition::count(int value) const
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::without_zeros() const
{
    std::vector<int> out;
    std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int v) { return v > 0; });
    return Partition(std::move(out));
}

Partition Partition::without_row(std::size_t i) const
{
    if (i < 1 || i > parts_.size())
        throw std::invalid_argument("row index out of range");
    auto out = parts_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return Partition(std::move(out));
}

Partition Partition::without_value(int value) const
{
    auto out = parts_;
    auto it = std::find(out.begin(), out.end(), value);
    if (it == out.end())
        throw std::invalid_argument("value " + std::to_string(value) + " not in partition " + to_string());
    out.erase(it);
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts_.size(); ++k)
        os << (k ? "," : "") << parts_[k];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.to_string();
}

std::vector<Partition> sigma_set(const Partition& m, std::size_t j)
{
    if (j > m.size())
        throw std::invalid_argument("sigma_set: j exceeds partition length");
    return subtract_blocks(m, j, 0);
}

bool is_anchor(const Partition& m, std::size_t i)
{
    return i >= 1 && i <= m.size() && (i == m.size() || m.row(i) > m.row(i + 1));
}

std::vector<Partition> sigma_set_anchored(const Partition& m, std::size_t j, std::size_t i)
{
    if (i < 1 || i > m.size())
        throw std::invalid_argument("sigma_set_anchored: row index out of range");
    if (j < 1 || j > m.size())
        throw std::invalid_argument("sigma_set_anchored: j out of range");
    if (m.row(i) == 0)
        return {};
    if (!is_anchor(m, i))
        throw std::invalid_argument("sigma_set_anchored: m_i > m_{i+1} fails for " + m.to_string());
    return subtract_blocks(m, j, m.row(i));
}

std::int64_t count_assemblies(const Partition& m, const Partition& lam)
{
    if (m.size() != lam.size())
        throw std::invalid_argument("count_assemblies: length mismatch");
    if (m.sum() < lam.sum())
        throw std::invalid_argument("count_assemblies: sum(m) < sum(lam)");
    const int top = std::max(m.empty() ? 0 : m.row(1), lam.empty() ? 0 : lam.row(1)) + 1;
    const auto x = value_counts(lam, top);
    const auto y = value_counts(m, top);
    // k[v] = entries of value v in lam that receive a box.
    std::int64_t result = 1;
    int carried = 0;
    for (std::size_t v = 0; v <= static_cast<std::size_t>(top); ++v) {
        const int k = x[v] - y[v] + carried;
        if (k < 0 || k > x[v])
            return 0;
        result = checked_mul(result, binomial(x[v], k));
        carried = k;
    }
    return carried == 0 ? result : 0;
}

std::int64_t first_deg_coefficient(const Partition& m, std::size_t i, const Partition& lam)
{
    if (i < 1 || i > m.size())
        throw std::invalid_argument("first_deg_coefficient: row index out of range");
    const int target = m.row(i) - 1;
    const auto ell = static_cast<std::int64_t>(lam.count(target));
    if (ell == 0)
        throw std::invalid_argument("first_deg_coefficient: " + lam.to_string() + " has no entry equal to m_i - 1");
    return checked_mul(ell, count_assemblies(m.without_row(i), lam.without_value(target)));
}

std::size_t anchor_index(const Partition& m, int v)
{
    const auto e = m.entries();
    for (std::size_t k = e.size(); k > 0; --k)
        if (e[k - 1] == v)
            return k;
    throw std::invalid_argument("anchor_index: value " + std::to_string(v) + " not in " + m.to_string());
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition parse_positive_partition(const std::string& text)
{
    std::vector<int> parts;
    if (text.empty())
        return Partition{};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("not an integer: '" + item + "'");
        if (v <= 0)
            throw std::invalid_argument("partition entries must be positive: '" + text + "'");
        parts.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
        throw std::invalid_argument("trailing comma in '" + text + "'");
    return Partition(std::move(parts));
}

}  // namespace hilb

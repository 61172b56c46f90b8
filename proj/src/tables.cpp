#include "toporank/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toporank/errors.hpp"

namespace toporank {

long long FrequencyTable::node_count() const noexcept {
    long long n = 0;
    for (const auto& e : entries)
        n += e.count;
    return n;
}

RankTable rank_table(const DegreeSequence& s) {
    if (s.empty())
        throw InsufficientDataError("cannot rank an empty degree sequence");
    std::vector<int> sorted = s.degrees;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<int>());
    RankTable t;
    t.entries.reserve(sorted.size());
    int rank = 0;
    for (int d : sorted)
        t.entries.push_back({++rank, d});
    return t;
}

FrequencyTable frequency_table(const DegreeSequence& s) {
    if (s.empty())
        throw InsufficientDataError("cannot count an empty degree sequence");
    std::map<int, long long> counts;
    for (int d : s.degrees)
        ++counts[d];
    FrequencyTable t;
    t.entries.reserve(counts.size());
    for (const auto& [degree, count] : counts)
        t.entries.push_back({degree, count});
    return t;
}

FrequencyTable frequency_from_ranks(const RankTable& t) {
    // Group boundaries: within the table, each distinct degree ends at some
    // last rank; its frequency is that rank minus the last rank of the next
    // higher degree (0 for the highest degree present).
    FrequencyTable f;
    long long previous_last_rank = 0;
    std::size_t i = 0;
    while (i < t.entries.size()) {
        const int degree = t.entries[i].degree;
        std::size_t j = i;
        while (j + 1 < t.entries.size() && t.entries[j + 1].degree == degree)
            ++j;
        const long long last_rank = t.entries[j].rank;
        f.entries.push_back({degree, last_rank - previous_last_rank});
        previous_last_rank = last_rank;
        i = j + 1;
    }
    std::reverse(f.entries.begin(), f.entries.end()); // ascending degree
    return f;
}

RankTable ranks_from_frequency(const FrequencyTable& t) {
    RankTable r;
    int rank = 0;
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
        for (long long k = 0; k < it->count; ++k)
            r.entries.push_back({++rank, it->degree});
    return r;
}

} // namespace toporank

#pragma once

#include "toporank/edge_list.hpp"

namespace toporank {

// (rank, degree) pairs in decreasing-degree order. Ranks are exactly 1..N
// with no gaps; degrees are non-increasing as rank increases. Ties among
// equal-degree nodes keep the insertion order of the degree sequence; no
// downstream quantity depends on the tie order (only the last rank of each
// degree group matters).
struct RankEntry {
    int rank;
    int degree;
};

struct RankTable {
    std::vector<RankEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

// (degree, count) pairs with degrees strictly increasing. Degrees that do
// not occur carry no entry (a zero count has no place on a log axis).
struct FrequencyEntry {
    int degree;
    long long count;
};

struct FrequencyTable {
    std::vector<FrequencyEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    long long node_count() const noexcept;
};

// Sorts the degrees in decreasing order and assigns ranks 1..N.
// Throws InsufficientDataError on an empty sequence.
RankTable rank_table(const DegreeSequence& s);

// Exact multiplicity count per distinct degree.
// Throws InsufficientDataError on an empty sequence.
FrequencyTable frequency_table(const DegreeSequence& s);

// Recovers frequencies from group boundaries: for each distinct degree d,
// f_d = last_rank(d) - last_rank(smallest present degree above d), with the
// highest degree differenced against 0. Equals frequency_table of the
// underlying multiset.
FrequencyTable frequency_from_ranks(const RankTable& t);

// Inverse reconstruction by cumulative summation: the last node of degree d
// lands at rank sum of f_d' over all present d' >= d. Round-trips exactly
// through frequency_from_ranks.
RankTable ranks_from_frequency(const FrequencyTable& t);

} // namespace toporank

#include <random>

#include <doctest.h>

#include "toporank/errors.hpp"
#include "toporank/tables.hpp"

using namespace toporank;

namespace {

bool operator==(const RankEntry& a, const RankEntry& b) {
    return a.rank == b.rank && a.degree == b.degree;
}

bool operator==(const FrequencyEntry& a, const FrequencyEntry& b) {
    return a.degree == b.degree && a.count == b.count;
}

template <class T>
bool same_entries(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i]))
            return false;
    return true;
}

DegreeSequence seq(std::vector<int> degrees) {
    return DegreeSequence{std::move(degrees)};
}

} // namespace

TEST_CASE("rank_table sorts by decreasing degree") {
    const RankTable t = rank_table(seq({3, 2, 2, 1, 1, 1}));
    CHECK(same_entries(t.entries, {{1, 3}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}}));
    CHECK(same_entries(rank_table(seq({5})).entries, {{1, 5}}));
    CHECK(same_entries(rank_table(seq({1, 1, 1, 1})).entries, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    CHECK_THROWS_AS(rank_table(seq({})), InsufficientDataError);
}

TEST_CASE("frequency_table counts multiplicities") {
    CHECK(same_entries(frequency_table(seq({3, 2, 2, 1, 1, 1})).entries, {{1, 3}, {2, 2}, {3, 1}}));
    CHECK(same_entries(frequency_table(seq({7, 7, 7})).entries, {{7, 3}}));
    CHECK(same_entries(frequency_table(seq({3, 3, 3, 3})).entries, {{3, 4}}));
    CHECK_THROWS_AS(frequency_table(seq({})), InsufficientDataError);
}

TEST_CASE("frequency_from_ranks equals direct counting") {
    const RankTable t = rank_table(seq({3, 2, 2, 1, 1, 1}));
    CHECK(same_entries(frequency_from_ranks(t).entries, {{1, 3}, {2, 2}, {3, 1}}));
    CHECK(same_entries(frequency_from_ranks(rank_table(seq({5}))).entries, {{5, 1}}));
}

TEST_CASE("ranks_from_frequency reconstructs the canonical rank table") {
    FrequencyTable f;
    f.entries = {{1, 3}, {2, 2}, {3, 1}};
    CHECK(same_entries(ranks_from_frequency(f).entries,
                       {{1, 3}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}}));

    FrequencyTable single;
    single.entries = {{5, 1}};
    CHECK(same_entries(ranks_from_frequency(single).entries, {{1, 5}}));

    FrequencyTable distinct;
    distinct.entries = {{1, 1}, {2, 1}, {3, 1}};
    CHECK(same_entries(ranks_from_frequency(distinct).entries, {{1, 3}, {2, 2}, {3, 1}}));
}

TEST_CASE("tie order among equal degrees does not affect any derived quantity") {
    const DegreeSequence a = seq({1, 3, 1, 2, 1, 2});
    const DegreeSequence b = seq({3, 2, 2, 1, 1, 1});
    const RankTable ra = rank_table(a);
    const RankTable rb = rank_table(b);
    CHECK(same_entries(ra.entries, rb.entries));
    CHECK(same_entries(frequency_from_ranks(ra).entries, frequency_from_ranks(rb).entries));
}

TEST_CASE("property: the difference rule matches direct counting on random sequences") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> size(1, 80);
    std::uniform_int_distribution<int> degree(1, 12);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> degrees(static_cast<std::size_t>(size(rng)));
        for (int& d : degrees)
            d = degree(rng);
        const DegreeSequence s = seq(degrees);

        const RankTable ranks = rank_table(s);
        const FrequencyTable direct = frequency_table(s);
        const FrequencyTable derived = frequency_from_ranks(ranks);
        CHECK(same_entries(direct.entries, derived.entries));

        // round trip and the N identities
        const RankTable rebuilt = ranks_from_frequency(derived);
        CHECK(same_entries(rebuilt.entries, ranks.entries));
        CHECK(derived.node_count() == static_cast<long long>(s.size()));
        CHECK(rebuilt.entries.back().rank == static_cast<int>(s.size()));
    }
}

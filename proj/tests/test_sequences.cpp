#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "fibdiv/divisibility.hpp"
#include "fibdiv/periods.hpp"
#include "fibdiv/sequences.hpp"

using namespace fibdiv;

namespace {

const std::vector<std::uint64_t> kOddNondividing100 = {
    9,  17, 19, 23, 27, 31, 45, 51, 53, 57,
    61, 63, 69, 79, 81, 83, 85, 93, 95, 99};

const std::vector<std::uint64_t> kPrimeNondividing200 = {
    2, 17, 19, 23, 31, 53, 61, 79, 83, 107, 109, 137, 167, 173, 181, 197};

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("sequence prefixes match hand-computed tables") {
    CHECK(generate(SequenceId::A133246, 100).terms == kOddNondividing100);
    CHECK(generate(SequenceId::A133247, 200).terms == kPrimeNondividing200);

    std::vector<std::uint64_t> base200 = kPrimeNondividing200;
    base200.insert(base200.begin() + 1, 9);  // 9 slots between 2 and 17
    CHECK(generate(SequenceId::BASE, 200).terms == base200);
}

TEST_CASE("TermList carries its identity and limit") {
    const TermList list = generate(SequenceId::A133246, 100);
    CHECK(list.id == SequenceId::A133246);
    CHECK(list.limit == 100);
    CHECK(sequence_id_name(list.id) == std::string("A133246"));
    CHECK(sequence_id_name(SequenceId::A133247) == std::string("A133247"));
    CHECK(sequence_id_name(SequenceId::BASE) == std::string("BASE"));
}

TEST_CASE("odd nondividing terms up to 2000") {
    const TermList list = generate(SequenceId::A133246, 2000);
    CHECK(list.terms.size() == 484);
    REQUIRE(list.terms.size() >= 5);
    const std::vector<std::uint64_t> tail(list.terms.end() - 5,
                                          list.terms.end());
    CHECK(tail == std::vector<std::uint64_t>{1989, 1991, 1995, 1997, 1999});

    // every term is odd and verified by the divisibility criterion
    for (std::uint64_t n : list.terms) {
        REQUIRE(n % 2 == 1);
        REQUIRE(divides_no_odd_fib(n).divides_no_odd_fib);
    }
    // and nothing odd was missed
    std::set<std::uint64_t> seen(list.terms.begin(), list.terms.end());
    for (std::uint64_t n = 1; n <= 2000; n += 2)
        REQUIRE(seen.count(n) ==
                (divides_no_odd_fib(n).divides_no_odd_fib ? 1u : 0u));
}

TEST_CASE("prime sequence with and without 2") {
    GenerateOptions opts;
    opts.include_two = false;
    const TermList without = generate(SequenceId::A133247, 200, opts);
    std::vector<std::uint64_t> expected(kPrimeNondividing200.begin() + 1,
                                        kPrimeNondividing200.end());
    CHECK(without.terms == expected);

    const TermList with_two = generate(SequenceId::A133247, 200);
    CHECK(with_two.terms.front() == 2);
}

TEST_CASE("base sequence structure") {
    const TermList base = generate(SequenceId::BASE, 3000);
    const TermList primes = generate(SequenceId::A133247, 3000);

    // contains 2, no other even number
    REQUIRE(!base.terms.empty());
    CHECK(base.terms.front() == 2);
    for (std::uint64_t n : base.terms)
        if (n != 2) REQUIRE(n % 2 == 1);

    // the prime members are exactly the prime sequence
    std::vector<std::uint64_t> base_primes;
    std::vector<std::uint64_t> base_composites;
    for (std::uint64_t n : base.terms)
        (is_prime_u64(n) ? base_primes : base_composites).push_back(n);
    CHECK(base_primes == primes.terms);

    // 9 is the lone composite
    CHECK(base_composites == std::vector<std::uint64_t>{9});

    // minimality: no term divides another
    for (std::size_t i = 0; i < base.terms.size(); ++i)
        for (std::size_t j = i + 1; j < base.terms.size(); ++j)
            REQUIRE(base.terms[j] % base.terms[i] != 0);
}

TEST_CASE("base members cover the full odd sequence by divisibility") {
    const TermList base = generate(SequenceId::BASE, 2000);
    const TermList odd = generate(SequenceId::A133246, 2000);
    for (std::uint64_t n : odd.terms) {
        bool covered = false;
        for (std::uint64_t b : base.terms)
            if (n % b == 0) {
                covered = true;
                break;
            }
        REQUIRE(covered);
    }
}

TEST_CASE("prime nondividing counts") {
    CHECK(prime_nondividing_count(1) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
    CHECK(prime_nondividing_count(7) == std::pair<std::uint64_t, std::uint64_t>{2, 7});
    CHECK(prime_nondividing_count(1500) ==
          std::pair<std::uint64_t, std::uint64_t>{561, 1500});
}

TEST_CASE("first_primes produces the right tail") {
    const std::vector<std::uint64_t> primes = detail::first_primes(1500);
    REQUIRE(primes.size() == 1500);
    CHECK(primes.front() == 2);
    CHECK(primes.back() == 12553);
    for (std::uint64_t p : primes) REQUIRE(is_prime_u64(p));
    CHECK(std::is_sorted(primes.begin(), primes.end()));
}

TEST_CASE("b-file rendering") {
    CHECK(to_bfile(generate(SequenceId::BASE, 9)) == "1 2\n2 9\n");
    CHECK(to_bfile(generate(SequenceId::A133246, 20)) == "1 9\n2 17\n3 19\n");
    TermList empty{SequenceId::A133246, 2, {}};
    CHECK(to_bfile(empty) == "");
}

TEST_CASE("generation is deterministic across thread counts") {
    for (SequenceId id :
         {SequenceId::A133246, SequenceId::A133247, SequenceId::BASE}) {
        GenerateOptions one;
        one.threads = 1;
        GenerateOptions five;
        five.threads = 5;
        const TermList a = generate(id, 5000, one);
        const TermList b = generate(id, 5000, five);
        REQUIRE(a.terms == b.terms);
    }
}

TEST_CASE("degenerate and invalid limits") {
    CHECK(generate(SequenceId::A133246, 2).terms.empty());
    CHECK(generate(SequenceId::BASE, 2).terms ==
          std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(generate(SequenceId::A133246, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(SequenceId::A133246, 0), std::invalid_argument);
    CHECK_THROWS_AS(prime_nondividing_count(0), std::invalid_argument);
}

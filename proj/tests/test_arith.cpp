#include <doctest.h>

#include "axadd/arith.hpp"
#include "axadd/rng.hpp"

using namespace axadd;

TEST_CASE("words mask to their width on construction") {
    CHECK(Word(0x1FF, 8).value == 0xFF);
    CHECK(Word(0xFFFFFFFFFFFFFFFFull, 64).value == 0xFFFFFFFFFFFFFFFFull);
    CHECK(Word(0xFFFFFFFFFFFFFFFFull, 1).value == 1);
    CHECK_THROWS_AS(Word(0, 65), ConfigError);

    CounterRng rng{41};
    for (uint64_t i = 0; i < 2000; ++i) {
        unsigned w = static_cast<unsigned>(rng.at(2 * i) % 64) + 1;
        Word word(rng.at(2 * i + 1), w);
        CHECK(word.value <= Word::mask(w));
    }
}

TEST_CASE("exact_add basics") {
    CHECK(exact_add(Word(0, 8), Word(0, 8)).value() == 0);

    AddResult carry = exact_add(Word(255, 8), Word(1, 8));
    CHECK(carry.value() == 256);
    CHECK(carry.carry);
    CHECK(carry.bits == 0);

    // the worked 16-bit example: accurate sum 53,162
    CHECK(exact_add(Word(0x6796, 16), Word(0x6814, 16)).value() == 53162);

    CHECK_THROWS_AS(exact_add(Word(1, 8), Word(1, 9)), ConfigError);
    CHECK_THROWS_AS(exact_add(Word(), Word()), ConfigError);
}

TEST_CASE("exact_add agrees with wide integer addition exhaustively up to n=10") {
    for (unsigned n : {1u, 2u, 3u, 6u, 8u, 10u}) {
        uint64_t side = uint64_t{1} << n;
        for (uint64_t a = 0; a < side; ++a)
            for (uint64_t b = 0; b < side; ++b)
                REQUIRE(exact_add(Word(a, n), Word(b, n)).value() == a + b);
    }
}

TEST_CASE("exact_add keeps the carry at width 64") {
    AddResult r = exact_add(Word(~uint64_t{0}, 64), Word(~uint64_t{0}, 64));
    CHECK(r.carry);
    CHECK(r.bits == ~uint64_t{0} - 1);
}

TEST_CASE("split_operand") {
    auto [hi, lo] = split_operand(Word(0xCFAA, 16), 8);
    CHECK(hi == Word(0xCF, 8));
    CHECK(lo == Word(0xAA, 8));

    auto [hi0, lo0] = split_operand(Word(0x6796, 16), 0);
    CHECK(hi0 == Word(0x6796, 16));
    CHECK(lo0.width == 0);
    CHECK(lo0.value == 0);

    auto [h, l] = split_operand(Word(0x6796, 16), 8);
    CHECK(h.value == 0x67);
    CHECK(l.value == 0x96);
    CHECK((h.value << 8) + l.value == 0x6796);

    CHECK_THROWS_AS(split_operand(Word(1, 4), 5), ConfigError);
}

TEST_CASE("split/recombine is the identity") {
    // exhaustive at n = 12
    for (unsigned m = 0; m <= 12; ++m)
        for (uint64_t v = 0; v < (1u << 12); ++v) {
            auto [hi, lo] = split_operand(Word(v, 12), m);
            REQUIRE((hi.value << m) + lo.value == v);
        }
    // randomized above
    CounterRng rng{7};
    for (uint64_t i = 0; i < 5000; ++i) {
        unsigned n = 13 + static_cast<unsigned>(rng.at(3 * i) % 52);
        unsigned m = static_cast<unsigned>(rng.at(3 * i + 1) % (n + 1));
        Word w(rng.at(3 * i + 2), n);
        auto [hi, lo] = split_operand(w, m);
        unsigned __int128 back = (static_cast<unsigned __int128>(hi.value) << m) + lo.value;
        REQUIRE(back == w.value);
    }
}

TEST_CASE("validate_config accepts the standard evaluation configs") {
    CHECK_NOTHROW(validate_config({AdderKind::Haloc, 32, 10, 5}));
    CHECK_NOTHROW(validate_config({AdderKind::Herloa, 32, 10, 0}));
    CHECK_NOTHROW(validate_config({AdderKind::Mherloa, 32, 10, 5}));
    CHECK_NOTHROW(validate_config({AdderKind::Oloca, 32, 10, 5}));
    CHECK_NOTHROW(validate_config({AdderKind::Loa, 32, 10, 0}));
    CHECK_NOTHROW(validate_config({AdderKind::Exact, 32, 0, 0}));
}

TEST_CASE("validate_config rejects invariant violations with the offending field") {
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Haloc, 8, 1, 0}),
                         doctest::Contains("m must be 0 or at least 2"), ConfigError);
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Loa, 8, 4, 2}),
                         doctest::Contains("k must be 0"), ConfigError);
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Haloc, 8, 4, 3}),
                         doctest::Contains("k <= m-2"), ConfigError);
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Exact, 8, 2, 0}),
                         doctest::Contains("exact requires"), ConfigError);
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Loa, 8, 9, 0}), doctest::Contains("m exceeds"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(validate_config({AdderKind::Oloca, 8, 4, 5}),
                         doctest::Contains("k exceeds"), ConfigError);
    CHECK_THROWS_AS(validate_config({AdderKind::Loa, 0, 0, 0}), ConfigError);
    CHECK_THROWS_AS(validate_config({AdderKind::Loa, 65, 0, 0}), ConfigError);

    // boundary cases that are legal
    CHECK_NOTHROW(validate_config({AdderKind::Haloc, 8, 2, 0}));
    CHECK_NOTHROW(validate_config({AdderKind::Oloca, 8, 4, 4}));
    for (AdderKind kind : all_adder_kinds) CHECK_NOTHROW(validate_config({kind, 16, 0, 0}));
}

TEST_CASE("kind names round-trip") {
    for (AdderKind kind : all_adder_kinds) {
        auto back = kind_from_name(kind_name(kind));
        REQUIRE(back.has_value());
        CHECK(*back == kind);
    }
    CHECK(kind_from_name("HALOC") == AdderKind::Haloc);
    CHECK(!kind_from_name("nosuch").has_value());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsuper/textio.hpp"

using namespace wsuper;

namespace {
const ScalarMode kSym = ScalarMode::symbolic();
AlgebraConfig cfg0() { return AlgebraConfig(HalfInt::whole(0), kSym); }
AlgebraConfig cfg_half() { return AlgebraConfig(HalfInt(1), kSym); }
} // namespace

TEST_CASE("halfint text") {
    CHECK(parse_halfint("3").twice == 6);
    CHECK(parse_halfint("-3/2").twice == -3);
    CHECK(parse_halfint("1/2").twice == 1);
    CHECK(HalfInt(-3).to_string() == "-3/2");
    CHECK(HalfInt::whole(4).to_string() == "4");
    CHECK(parse_halfint("4/2") == HalfInt::whole(2));
    CHECK_THROWS_AS(parse_halfint("x"), ParseFailure);
}

TEST_CASE("scalar text round-trips") {
    for (const char* text : {"0", "5", "-7/3", "(l)", "(2*l+1)/(l)", "(l^2-1/2*l+3)",
                             "(-l+1)/(l^2+2)", "(1)/(l)"}) {
        Scalar s = parse_scalar(text, kSym);
        CHECK(render_scalar(s) == text);
    }
    // non-canonical spellings normalize
    CHECK(render_scalar(parse_scalar("(2*l+2)/(2)", kSym)) == "(l+1)");
    CHECK(render_scalar(parse_scalar("(l)/(2*l)", kSym)) == "1/2");
    CHECK(render_scalar(parse_scalar("(3*l)/(l^2)", kSym)) == "(3)/(l)");
}

TEST_CASE("element text round-trips") {
    auto c0 = cfg0();
    auto ch = cfg_half();
    for (const char* text : {"0", "L[2]", "3*L[1]", "-2*I[2] + -1*I[3]", "1/2*H[5]",
                             "(2*l)*H[3]", "2*L[1] + -1/3*I[0] + (l+1)*G[4]"}) {
        CHECK(render_element(parse_element(text, c0)) == text);
    }
    CHECK(render_element(parse_element("3/2*L[-1] + (l+1)*H[1/2]", ch)) ==
          "3/2*L[-1] + (l+1)*H[1/2]");
    // '-' separator folds into the following coefficient
    CHECK(render_element(parse_element("L[1] - I[2]", c0)) == "L[1] + -1*I[2]");
    CHECK(render_element(parse_element("L[1] - 2*I[2]", c0)) == "L[1] + -2*I[2]");
    // like terms merge; zero sums vanish
    CHECK(render_element(parse_element("L[1] + L[1]", c0)) == "2*L[1]");
    CHECK(render_element(parse_element("L[1] - 1*L[1]", c0)) == "0");
}

TEST_CASE("parse errors carry positions") {
    auto c0 = cfg0();
    CHECK_THROWS_AS(parse_element("L[2", c0), ParseFailure);
    CHECK_THROWS_AS(parse_element("Q[2]", c0), ParseFailure);
    CHECK_THROWS_AS(parse_element("3*", c0), ParseFailure);
    CHECK_THROWS_AS(parse_element("L[2] + + L[3]", c0), ParseFailure);
    CHECK_THROWS_AS(parse_element("", c0), ParseFailure);
    CHECK_THROWS_AS(parse_element("G[1/2]", c0), ParseFailure); // half index needs s = 1/2
    try {
        parse_element("L[2] $", c0);
        CHECK(false);
    } catch (const ParseFailure& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("render/parse is a fixpoint on sampled elements") {
    std::uint64_t state = 99;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int s2 : {0, 1}) {
        AlgebraConfig c(HalfInt(s2), kSym);
        for (int trial = 0; trial < 120; ++trial) {
            Element e;
            int terms = static_cast<int>(next() % 5);
            for (int t = 0; t < terms; ++t) {
                Family f = static_cast<Family>(next() % 4);
                std::int64_t twice = 2 * (static_cast<std::int64_t>(next() % 13) - 6);
                if (s2 == 1 && (f == Family::G || f == Family::H))
                    twice += 1;
                Rational num(static_cast<long>(next() % 15) - 7, 1 + static_cast<long>(next() % 5));
                Scalar coeff = Scalar::from_rational(num, kSym);
                if (next() % 3 == 0) // sometimes lambda-dependent
                    coeff = coeff * Scalar::lambda(kSym) + Scalar::one(kSym);
                e.add_term({f, HalfInt(twice)}, coeff);
            }
            std::string text = render_element(e);
            Element back = parse_element(text, c);
            CHECK(back == e);
            CHECK(render_element(back) == text);
        }
    }
}

TEST_CASE("specialized-mode parsing substitutes lambda") {
    ScalarMode at2 = ScalarMode::specialized(Rational(2));
    CHECK(parse_scalar("(l+1)", at2).constant_value() == Rational(3));
    CHECK_THROWS_AS(parse_scalar("(1)/(l-2)", at2), AlgebraError); // pole at l = 2
    AlgebraConfig c(HalfInt::whole(0), at2);
    CHECK(render_element(parse_element("(l)*L[0]", c)) == "2*L[0]");
    CHECK(render_element(parse_element("(l-2)*L[0]", c)) == "0");
}

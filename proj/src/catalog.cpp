#include "fmm/catalog.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "fmm/matrix.hpp"

namespace fmm {
namespace {

// Products m1..m99 and outputs c11..c55 as published, with the scalar factor
// L of m8 and m9 folded into the left factor.  @M38@ is substituted with the
// left factor of m38 (see kM38VerifiedAlpha).
constexpr std::string_view kMakarov99Formulas = R"(
m1 = (a51 + a35 + a45 - a55) * (b54)
m2 = (-a12 + a14) * (b21)
m3 = (-a32) * (b23)
m4 = (-a34) * (b43)
m5 = (a14) * (b21 + b41)
m6 = (-a32 + a42) * (b14 - b24 + b34 - b44)
m7 = (a12 + a32 - a14) * (b21 + b41 + b43)
m8 = (L*a53) * (b35)
m9 = (L*a51) * (b15)
m10 = (-a43 + a34 - a44) * (b21 - b41 + b12 - b22 - b32 + b42)
m11 = (a21 - a12 + a22 + a23 - a14 + a24) * (-b43 - b34 + b44)
m12 = (a32 - a42 - a14 + a24) * (b12 - b22 + b14 - b24 + b34 - b44)
m13 = (-a21 + a12 - a22) * (-b23 + b43 - b14 + b24 + b34 - b44)
m14 = (a45) * (b32 - b42 + b52)
m15 = (a12 - a21 - a22 - a43 + a34 - a44) * (b22 - b21 - b12 + b44 - b43 - b34)
m16 = (-a41 + a32 - a42 - a43 + a34 - a44) * (-b21 - b12 + b22)
m17 = (-a23 - a25) * (-b53 + b54)
m18 = (a43 + a44) * (b21 - b41 - b22 + b42)
m19 = (-a21 - a22 - a23 - a24) * (-b43 + b44)
m20 = (a14 - a24) * (b12 - b22 + b32 - b42 + b14 - b24 + b34 - b44)
m21 = (a21 + a22) * (-b23 + b43 + b24 - b44)
m22 = (-a12 - a32 + a14 + a34) * (b41 + b43)
m23 = (a12 + a32) * (b21 + b41 + b23 + b43)
m24 = (a12 - a22 - a32 + a42 - a25) * (b12 - b22)
m25 = (-a31 + a41 - a32 + a42) * (b14 + b34)
m26 = (-a41 - a43) * (-b13 + b23 + b14 - b24)
m27 = (a35) * (b32 + b52)
m28 = (-a54 - a45) * (b32 - b42 + b52 + b54)
m29 = (a21 + a22 + a43 + a44) * (-b21 + b22 - b43 + b44)
m30 = (a41 + a42 + a43 + a44) * (-b21 + b22)
m31 = (-a52) * (b25 + b45)
m32 = (L*a31 + a51 - L^2*a35) * (b11 + L^-1*b51 - L*b15)
m33 = (a23 + a25 + a45) * (b53 - b54 - b35 + b45)
m34 = (L*a13 + a53 - L^2*a15) * (b31 + L^-1*b51 - L*b35)
m35 = (a52 - a54) * (b45)
m36 = (a14 - a23 + a43 - a24 - a34 + a44) * (b42 - b41 - b32 - b43 - b34 + b44)
m37 = (-a52) * (b14 - b24 + b54)
m38 = (@M38@) * (b31 - b41 - b32 + b42 - b13 + b23 + b14 - b24)
m39 = (a53 + a54 - a35) * (b32 + b52 + b54)
m40 = (-L^-1*a11 - L^-2*a51 + a15) * (b13 + L^-1*b53 - L*b15)
m41 = (a21 - a41 - a12 + a22 + a32 - a42) * (b24 - b21 - b12 + b22 - b23 - b14)
m42 = (a25) * (b12 - b22 + b52)
m43 = (-a54) * (b32 - b42 + b52 + b34 - b44 + b54)
m44 = (a31 - a41 + a32 - a42 - a13 + a23 - a14 + a24) * (b12 + b14 + b34)
m45 = (-a52 - a25) * (b12 - b22 - b54)
m46 = (L*a33 + a53 - L^2*a35) * (b33 + L^-1*b53 - L*b35)
m47 = (a52 + a14) * (b21 - b45)
m48 = (L^-1*a31 + L^-2*a51) * (b11 + L^-1*b51)
m49 = (a45) * (-b53 + b54 - b15 + b25 + b55)
m50 = (-L*a31 + L^2*a35) * (b11 - L*b15)
m51 = (a21 - a45) * (-b51 + b52 + b15 - b25)
m52 = (-a21) * (b11 - b21 - b51 - b12 + b22 + b52 - b13 + b23 + b14 - b24)
m53 = (a21 + a25) * (b51 - b52)
m54 = (L^-1*a13 + L^-2*a53) * (b31 + L^-1*b51)
m55 = (a52 - a34 - a54) * (b23 + b25 + b45)
m56 = (-L*a13 + L^2*a15) * (b31 - L*b35)
m57 = (a23 + a43 + a25 + a45) * (b35 - b45)
m58 = (a23 - a43 + a24 - a44) * (-b41 + b42 - b43 + b44)
m59 = (-a41 - a45) * (-b15 + b25)
m60 = (a13 - a23 + a14 - a24) * (b12 + b32 + b14 + b34)
m61 = (a53 + a54) * (b32 + b52 + b34 + b54)
m62 = (a21 + a41 + a23 + a43) * (b31 - b41 - b32 + b42)
m63 = (-a21 + a41 - a22 + a42) * (-b21 + b22 - b23 + b24)
m64 = (L^-1*a11 + L^-2*a51) * (b13 + L^-1*b53)
m65 = (-a32 + a42 + a34 - a44 + a54) * (b34 - b44)
m66 = (-L*a11 + L^2*a15) * (b13 - L*b15)
m67 = (a15) * (b12 + b52)
m68 = (a51 + a52) * (b14 + b54)
m69 = (-L*a33 + L^2*a35) * (b33 - L*b35)
m70 = (-a53 - a15 - a25 + a55) * (b52 + b54)
m71 = (L^-1*a33 + L^-2*a53) * (b33 + L^-1*b53)
m72 = (-a14 + a24 + a34 - a44 - a45) * (b32 - b42)
m73 = (a11 - a21 - a31 + a41 + a12 - a22 - a32 + a42 - a15) * (b12)
m74 = (a12 - a22 + a52 - a14 + a24) * (b12 - b22 + b14 - b24)
m75 = (a51 + a52 - a15) * (b12 - b54)
m76 = (a21 + a41) * (b11 - b21 - b31 + b41 - b12 + b22 + b32 - b42 - b15 + b25)
m77 = (a33) * (b31)
m78 = (a11) * (b11)
m79 = (-a13 + a23 + a33 - a43 - a14 + a24 + a34 - a44 - a35) * (b32)
m80 = (a14 + a54) * (b41 + b45)
m81 = (-a31 - L^-1*a51 - a13 - L^-1*a53 + L*a15 + L*a35 + a55) * (b51)
m82 = (a23) * (-b31 + b41 + b32 - b42 + b33 - b43 - b53 - b34 + b44 + b54)
m83 = (a13) * (b33)
m84 = (a11 - a21 - a51 + a12 - a22 - a52 - a13 + a23 - a14 + a24) * (b12 + b14)
m85 = (a34 + a54) * (b23 + b43 + b25 + b45)
m86 = (-a11 - L^-1*a51 - a33 - L^-1*a53 + L*a15 + L*a35 + a55) * (b53)
m87 = (a43) * (-b13 + b23 + b33 - b43 + b14 - b24 - b34 + b44 - b35 + b45)
m88 = (a31) * (b13)
m89 = (a15) * (-b31 - L^-1*b51 - b13 - L^-1*b53 + L*b15 + L*b35 + b55)
m90 = (-a31 + a41 - a32 + a42 + a33 - a43 - a53 + a34 - a44 - a54) * (b34)
m91 = (a55) * (b55)
m92 = (a43 + a44) * (b45)
m93 = (a41 + a42) * (b25)
m94 = (a32 + a52 - a34 - a54) * (b23 + b25)
m95 = (-a35) * (b11 + L^-1*b51 + b33 + L^-1*b53 - L*b15 - L*b35 - b55)
m96 = (a23 + a24) * (b45)
m97 = (a21 + a22) * (b25)
m98 = (a25 + a45) * (-b51 + b52 - b35 + b45 + b55)
m99 = (a12 + a52) * (b21 + b25)
c11 = -L^-1*m8 - m2 + m5 + m78 + L*m54 - L^-1*m56 - L^-1*m34
c21 = m10 + m11 + m12 - m2 + m5 + m6 - m52 + m53 + m62 + m36 - m38 + m42 + m15 + m20 + m24 - m26
c31 = m7 - L^-1*m9 + m2 + m4 + m77 - L^-1*m50 - L^-1*m32 + L*m48 + m22
c41 = m7 + m10 + m12 + m14 + m2 + m4 + m6 + m72 + m76 + m51 + m52 + m59 + m38 + m16 + m20 + m22 + m26
c51 = m8 + m9 - m5 + m80 + m81 + m50 + m56 + m32 + m34 + m35 + m47
c12 = m10 + m11 - m2 + m5 + m67 + m73 + m58 + m60 + m36 + m44 + m15 + m18 + m19 + m25 + m29
c22 = m10 + m11 + m12 - m2 + m5 + m6 + m58 + m36 + m42 + m15 + m18 + m19 + m20 + m24 + m29
c32 = m7 + m10 + m2 + m4 + m79 + m60 + m44 + m16 + m18 + m22 + m25 + m27 + m30
c42 = m7 + m10 + m12 + m14 + m2 + m4 + m6 + m72 + m16 + m18 + m20 + m22 + m30
c52 = m14 + m1 + m67 + m70 + m75 + m39 + m42 + m45 + m27 + m28
c13 = -m7 - L^-1*m9 + m3 - m5 + m83 - L^-1*m66 + L*m64 + L*m40 + m23
c23 = -m7 - m11 - m12 + m13 + m3 - m5 - m6 + m74 + m82 + m62 + m37 - m38 + m45 + m17 + m23 - m24 - m26
c33 = -L^-1*m8 - m3 - m4 + m88 - L^-1*m69 + L*m71 - L^-1*m46
c43 = m13 - m14 - m3 - m4 - m6 + m87 + m57 + m65 + m33 + m41 + m43 + m15 - m16 - m17 + m26 - m28
c53 = m8 + m9 + m4 + m85 + m86 + m66 + m69 + m55 - L^2*m40 + m46 + m31
c14 = -m7 - m11 + m13 + m3 - m5 + m84 + m68 - m73 + m75 - m44 - m19 + m21 + m23 - m25
c24 = -m7 - m11 - m12 + m13 + m3 - m5 - m6 + m74 + m37 + m45 - m19 + m21 + m23 - m24
c34 = m13 - m3 - m4 + m90 + m61 + m63 - m39 + m41 + m15 - m16 + m21 - m25 - m27 + m29 - m30
c44 = m13 - m14 - m3 - m4 - m6 + m63 + m65 + m41 + m43 + m15 - m16 + m21 - m28 + m29 - m30
c54 = -m14 - m1 + m68 + m61 + m37 - m39 + m43 - m27 - m28
c15 = -L^-2*m8 - L^-2*m9 - L^-2*m34 + m2 + m89 + m99 + m54 + m64 + m40 - m47 + m31
c25 = m96 + m97 + m98 - m49 + m51 + m53 - m33 + m17
c35 = -L^-2*m8 - L^-2*m9 - L^-2*m46 - L^-2*m32 + m3 + m94 + m95 + m71 - m55 + m35 + m48
c45 = m92 + m93 + m49 + m57 + m59 + m33 - m17
c55 = L^-1*m8 + L^-1*m9 + m91 - m35 - m31
)";

constexpr std::string_view kStrassenFormulas = R"(
m1 = (a11 + a22) * (b11 + b22)
m2 = (a21 + a22) * (b11)
m3 = (a11) * (b12 - b22)
m4 = (a22) * (-b11 + b21)
m5 = (a11 + a12) * (b22)
m6 = (-a11 + a21) * (b11 + b12)
m7 = (a12 - a22) * (b21 + b22)
c11 = m1 + m4 - m5 + m7
c12 = m3 + m5
c21 = m2 + m4
c22 = m1 - m2 + m3 + m6
)";

// Flattened form of the variant with shared intermediate sums
// s1..s4, t1..t4, u1..u4.
constexpr std::string_view kWinogradFormulas = R"(
m1 = (a11) * (b11)
m2 = (a12) * (b21)
m3 = (a11 + a12 - a21 - a22) * (b22)
m4 = (a22) * (b11 - b12 - b21 + b22)
m5 = (a21 + a22) * (-b11 + b12)
m6 = (-a11 + a21 + a22) * (b11 - b12 + b22)
m7 = (a11 - a21) * (-b12 + b22)
c11 = m1 + m2
c12 = m1 + m3 + m5 + m6
c21 = m1 - m4 + m6 + m7
c22 = m1 + m5 + m6 + m7
)";

constexpr std::string_view kLadermanFormulas = R"(
m1 = (a11 + a12 + a13 - a21 - a22 - a32 - a33) * (b22)
m2 = (a11 - a21) * (-b12 + b22)
m3 = (a22) * (-b11 + b12 + b21 - b22 - b23 - b31 + b33)
m4 = (-a11 + a21 + a22) * (b11 - b12 + b22)
m5 = (a21 + a22) * (-b11 + b12)
m6 = (a11) * (b11)
m7 = (-a11 + a31 + a32) * (b11 - b13 + b23)
m8 = (-a11 + a31) * (b13 - b23)
m9 = (a31 + a32) * (-b11 + b13)
m10 = (a11 + a12 + a13 - a22 - a23 - a31 - a32) * (b23)
m11 = (a32) * (-b11 + b13 + b21 - b22 - b23 - b31 + b32)
m12 = (-a13 + a32 + a33) * (b22 + b31 - b32)
m13 = (a13 - a33) * (b22 - b32)
m14 = (a13) * (b31)
m15 = (a32 + a33) * (-b31 + b32)
m16 = (-a13 + a22 + a23) * (b23 + b31 - b33)
m17 = (a13 - a23) * (b23 - b33)
m18 = (a22 + a23) * (-b31 + b33)
m19 = (a12) * (b21)
m20 = (a23) * (b32)
m21 = (a21) * (b13)
m22 = (a31) * (b12)
m23 = (a33) * (b33)
c11 = m6 + m14 + m19
c12 = m1 + m4 + m5 + m6 + m12 + m14 + m15
c13 = m6 + m7 + m9 + m10 + m14 + m16 + m18
c21 = m2 + m3 + m4 + m6 + m14 + m16 + m17
c22 = m2 + m4 + m5 + m6 + m20
c23 = m14 + m16 + m17 + m18 + m21
c31 = m6 + m7 + m8 + m11 + m12 + m13 + m14
c32 = m12 + m13 + m14 + m15 + m22
c33 = m6 + m7 + m8 + m9 + m23
)";

// Strassen on the first two columns of B, four plain products for the third.
constexpr std::string_view kHopcroftKerr223Formulas = R"(
m1 = (a11 + a22) * (b11 + b22)
m2 = (a21 + a22) * (b11)
m3 = (a11) * (b12 - b22)
m4 = (a22) * (-b11 + b21)
m5 = (a11 + a12) * (b22)
m6 = (-a11 + a21) * (b11 + b12)
m7 = (a12 - a22) * (b21 + b22)
m8 = (a11) * (b13)
m9 = (a12) * (b23)
m10 = (a21) * (b13)
m11 = (a22) * (b23)
c11 = m1 + m4 - m5 + m7
c12 = m3 + m5
c13 = m8 + m9
c21 = m2 + m4
c22 = m1 - m2 + m3 + m6
c23 = m10 + m11
)";

constexpr std::string_view kHopcroftKerr332Formulas = R"(
m1 = (-a11 + a12 - a31 + a32 - a33) * (b21 - b22)
m2 = (a33) * (-b11 + b12 + b31 - b32)
m3 = (a11) * (b11)
m4 = (-a21 - a32 + a33) * (-b12 - b22)
m5 = (-a21 + a33) * (b11 - b12 - b22 - b31)
m6 = (-a11 - a31 + a32 - a33) * (b12 - b21 + b22)
m7 = (a31 - a32 + a33) * (-b12)
m8 = (a13 - a21 + a22 - a23) * (b21 + b32)
m9 = (-a21 + a22 - a23) * (-b32)
m10 = (a11 + a31 + a33) * (b11 - b12 + b21 - b22)
m11 = (-a21 + a22 + a33) * (b22 + b32)
m12 = (a13) * (-b31 + b32)
m13 = (-a21) * (-b11 + b31)
m14 = (-a13 + a21 + a23) * (-b21 - b31)
m15 = (-a12 + a13 - a21 + a22 - a23) * (-b21)
c11 = m3 + m8 + m9 - m12 + m15
c12 = -m1 - m6 + m7 + m8 + m9 + m15
c21 = m8 + m9 - m12 + m13 - m14
c22 = m2 + m5 + m9 + m11 + m13
c31 = -m3 + m4 - m5 - m6 + m10 - m13
c32 = -m2 + m4 - m5 - m7 - m13
)";

// Scanner for the formula lines above.  Columns are 1-based within the line.
class FormulaScanner {
 public:
  FormulaScanner(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  struct Term {
    std::string variable;  // e.g. "a21" or "m17"
    LaurentCoeff coefficient;
  };

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }

  /// Signed sum of terms, stopping at ')' or end of line.
  std::vector<Term> linear_form(char variable_letter) {
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == s_.size() || s_[pos_] == ')') break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      terms.push_back(term(variable_letter, sign));
      first = false;
    }
    if (terms.empty()) fail("empty linear form");
    return terms;
  }

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line_, pos_ + 1); }

 private:
  Term term(char variable_letter, int sign) {
    Term t{{}, LaurentCoeff(sign)};
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) fail("expected a factor");
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        t.coefficient = t.coefficient * LaurentCoeff(mpz_class(std::string(s_.substr(start, pos_ - start))));
      } else if (ch == 'L') {
        ++pos_;
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          int sgn = 1;
          if (pos_ < s_.size() && s_[pos_] == '-') {
            sgn = -1;
            ++pos_;
          }
          if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
          e = sgn * (s_[pos_++] - '0');
        }
        t.coefficient = t.coefficient * LaurentCoeff::monomial(1, e);
      } else if (ch == variable_letter) {
        if (!t.variable.empty()) fail("two variables in one term");
        t.variable = identifier();
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (t.variable.empty()) fail(std::string("term has no '") + variable_letter + "' variable");
    return t;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// "a21" -> (1, 0) after checking bounds.
std::pair<std::size_t, std::size_t> matrix_index(const std::string& var, std::size_t rows, std::size_t cols,
                                                 const FormulaScanner& scan) {
  if (var.size() != 3) scan.fail("variable '" + var + "' must be a letter and two digits");
  std::size_t i = static_cast<std::size_t>(var[1] - '0'), j = static_cast<std::size_t>(var[2] - '0');
  if (i < 1 || i > rows || j < 1 || j > cols) scan.fail("variable '" + var + "' out of range");
  return {i - 1, j - 1};
}

CoeffMatrix zero_coeffs(std::size_t rows, std::size_t cols) { return CoeffMatrix(rows, cols, LaurentCoeff()); }

BilinearScheme makarov_with_alpha38(std::string_view alpha38) {
  std::string text(kMakarov99Formulas);
  text.replace(text.find("@M38@"), 5, alpha38);
  return scheme_from_formulas(
      5, 5, 5, "makarov_sedoglavic_5x5x5_99",
      "99-multiplication 5x5 algorithm obtained from Makarov (1987) FMMA 5x5x5:100/101 "
      "by merging four Hopcroft-Kerr trilinear terms into two; free parameter L from the Winograd variant of "
      "Strassen; m8 and m9 carry the factor L on their left operand; m38 left factor: published text "
      "'a21 + a41 a43', verified form 'a21 + a41 + a43' (the only reading that satisfies the Brent equations)",
      text);
}

}  // namespace

BilinearScheme scheme_from_formulas(std::size_t a, std::size_t b, std::size_t c, std::string name,
                                    std::string provenance, std::string_view formulas) {
  std::map<std::size_t, BilinearProduct> products;
  std::vector<std::pair<std::size_t, std::string>> outputs;
  std::istringstream in{std::string(formulas)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    FormulaScanner scan(line, line_no);
    std::string lhs = scan.identifier();
    scan.expect('=');
    if (lhs[0] == 'm') {
      std::size_t index = std::stoul(lhs.substr(1));
      BilinearProduct p{zero_coeffs(a, b), zero_coeffs(b, c), zero_coeffs(a, c)};
      scan.expect('(');
      for (auto& t : scan.linear_form('a')) {
        auto [i, j] = matrix_index(t.variable, a, b, scan);
        p.alpha(i, j) += t.coefficient;
      }
      scan.expect(')');
      scan.expect('*');
      scan.expect('(');
      for (auto& t : scan.linear_form('b')) {
        auto [i, j] = matrix_index(t.variable, b, c, scan);
        p.beta(i, j) += t.coefficient;
      }
      scan.expect(')');
      if (!scan.at_end()) scan.fail("trailing text after product");
      if (!products.emplace(index, std::move(p)).second) scan.fail("duplicate product " + lhs);
    } else if (lhs[0] == 'c') {
      outputs.emplace_back(line_no, line);
    } else {
      scan.fail("line must define m<k> or c<ij>");
    }
  }
  // Outputs are resolved after all products are known.
  for (const auto& [out_line, text] : outputs) {
    FormulaScanner scan(text, out_line);
    std::string lhs = scan.identifier();
    auto [m, n] = matrix_index(lhs, a, c, scan);
    scan.expect('=');
    for (auto& t : scan.linear_form('m')) {
      std::size_t index = std::stoul(t.variable.substr(1));
      auto it = products.find(index);
      if (it == products.end()) scan.fail("unknown product " + t.variable);
      it->second.gamma(m, n) += t.coefficient;
    }
  }
  std::vector<BilinearProduct> ordered;
  for (auto& [index, p] : products) {
    if (index != ordered.size() + 1) throw SchemeError("products must be numbered m1..mr without gaps");
    ordered.push_back(std::move(p));
  }
  FmmaSignature sig{a, b, c, ordered.size()};
  return BilinearScheme(sig, std::move(ordered), std::move(name), std::move(provenance));
}

BilinearScheme makarov_sedoglavic_5x5x5_99() { return makarov_with_alpha38(kM38VerifiedAlpha); }

BilinearScheme makarov_sedoglavic_5x5x5_99_with_m38(std::string_view alpha) { return makarov_with_alpha38(alpha); }

BilinearScheme strassen_2x2x2() {
  return scheme_from_formulas(2, 2, 2, "strassen_2x2x2_7", "Strassen (1969), Gaussian elimination is not optimal",
                              kStrassenFormulas);
}

BilinearScheme winograd_2x2x2() {
  return scheme_from_formulas(2, 2, 2, "winograd_2x2x2_7",
                              "Winograd variant of Strassen (1971); 15 additions when intermediate sums are shared",
                              kWinogradFormulas);
}

BilinearScheme laderman_3x3x3() {
  return scheme_from_formulas(3, 3, 3, "laderman_3x3x3_23",
                              "Laderman (1976), a noncommutative algorithm for multiplying 3x3 matrices using 23 "
                              "multiplications",
                              kLadermanFormulas);
}

BilinearScheme hopcroft_kerr_2x2x3() {
  return scheme_from_formulas(2, 2, 3, "hopcroft_kerr_2x2x3_11",
                              "Hopcroft and Kerr (1971), Th. 3: 2x2 by 2x3 in 11 multiplications, realized as "
                              "Strassen on the first two columns plus 4 products for the third",
                              kHopcroftKerr223Formulas);
}

BilinearScheme hopcroft_kerr_3x3x2() {
  return scheme_from_formulas(3, 3, 2, "hopcroft_kerr_3x3x2_15",
                              "rank 15 for 3x3 by 3x2 as in Hopcroft and Kerr (1971); coefficients in {-1,0,1} "
                              "from a flip-graph walk started at the standard algorithm, certified by the Brent "
                              "equations",
                              kHopcroftKerr332Formulas);
}

BilinearScheme trivial_1x1x1() {
  return scheme_from_formulas(1, 1, 1, "trivial_1x1x1_1", "scalar product", "m1 = (a11) * (b11)\nc11 = m1\n");
}

BilinearScheme rotate_scheme(const BilinearScheme& scheme) {
  const auto& s = scheme.signature();
  std::vector<BilinearProduct> products;
  products.reserve(scheme.rank());
  for (const auto& p : scheme.products()) {
    products.push_back({p.beta, transpose(p.gamma), transpose(p.alpha)});
  }
  FmmaSignature rotated{s.b, s.c, s.a, s.r};
  return BilinearScheme(rotated, std::move(products), scheme.name() + "_rot",
                        scheme.provenance() + "; cyclically rotated");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({makarov_sedoglavic_5x5x5_99(), "makarov99", "FMMA 5x5x5:99", 99});
    v.push_back({strassen_2x2x2(), "strassen", "Strassen 1969", 7});
    v.push_back({winograd_2x2x2(), "winograd", "Winograd 1971", 7});
    v.push_back({laderman_3x3x3(), "laderman", "Laderman 1976", 23});
    v.push_back({hopcroft_kerr_2x2x3(), "hk223", "Hopcroft-Kerr 1971", 11});
    v.push_back({hopcroft_kerr_3x3x2(), "hk332", "Hopcroft-Kerr 1971", 15});
    v.push_back({trivial_1x1x1(), "trivial", "definition", 1});
    return v;
  }();
  return entries;
}

std::optional<BilinearScheme> find_catalog_scheme(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.alias == name || e.scheme.name() == name) return e.scheme;
  }
  return std::nullopt;
}

}  // namespace fmm

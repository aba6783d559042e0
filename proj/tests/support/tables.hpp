#pragma once
// Published tables, transcribed verbatim (w = omega, a = alpha, b = beta, nu = nu).

#include <string>
#include <utility>
#include <vector>

namespace tables {

// h_k(nu) as numerator / denominator.
inline const std::vector<std::pair<std::string, std::string>> bessel_h = {
    {"1", "1"},
    {"1", "(nu+1)"},
    {"nu+3", "2(nu+1)^2 (nu+2)"},
    {"nu^2 +8 nu+19", "3! (nu+1)^3(nu+2)(nu+3)"},
    {"nu^4 +17 nu^3+117 nu^2 +379 nu+422", "4! (nu+1)^4(nu+2)^2(nu+3)(nu+4)"},
    {"nu^5 +26 nu^4+294 nu^3+1816 nu^2+5969 nu+7302", "5! (nu+1)^5(nu+2)^2(nu+3)(nu+4)(nu+5)"},
    {"nu^8 +42 nu^7+811 nu^6+9412 nu^5+71155 nu^4+349786 nu^3+1043637 nu^2 +1674616 nu+1091052",
     "6! (nu+1)^6 (nu+2)^3 (nu+3)^2 (nu+4) (nu+5)(nu+6)"},
    {"nu^9 +55 nu^8 +1417 nu^7 +22535 nu^6 +243311 nu^5 + 1827401 nu^4 +9292435 nu^3 +29539597 nu^2 +51572980 nu "
     "+36978156",
     "7! (nu+1)^7 (nu+2)^3 (nu+3)^2 (nu+4) (nu+5) (nu+6) (nu+7)"},
};

// q(k,w) and p(k,w), k = 0..10.
inline const std::vector<std::pair<std::string, std::string>> q_and_p = {
    {"1", "1"},
    {"w", "w"},
    {"w", "w^2 + w"},
    {"w^2 + w", "w^3 + w^2 +w"},
    {"w^2 + w", "w^4 +w^3+2 w^2+w"},
    {"2 w^2 +w", "w^5 +w^4+2w^3+ 2w^2+w"},
    {"w^3 + 2 w^2 + w", "w^6 +w^5+2w^4+ 3 w^3+3w^2+w"},
    {"w^3 + 3 w^2 +w", "w^7 +w^6+2 w^5+3 w^4+4 w^3+3 w^2+ w"},
    {"2 w^3 + 3 w^2 + w", "w^8+w^7+2 w^6+3 w^5+5 w^4+ 5 w^3+4 w^2+w"},
    {"3 w^3+ 4 w^2 +w", "w^9 +w^8 +2 w^7 +3 w^6 +5 w^5 + 6w^4+7w^3+4 w^2 +w"},
    {"w^4+ 4 w^3+ 4 w^2+ w", "w^10+w^9 +2w^8+3 w^7+5w^6+7 w^5 +9 w^4+8 w^3 +5 w^2+ w"},
};

// q(k,w,2) and q(k,w,3), k = 0..10. Row 8 of the second column carries the printed sign.
inline const std::vector<std::pair<std::string, std::string>> q_rho = {
    {"1", "1"},
    {"2 w", "3 w"},
    {"2 w + w^2", "3 w + 3 w^2"},
    {"2w + 4 w^2", "3w + 9w^2 +w^3"},
    {"2 w + 5 w^2 +2 w^3", "3 w +12 w^2+9 w^3"},
    {"2 w + 8 w^2 +4 w^3", "3 w +18 w^2+18 w^3+ 3w^4"},
    {"2 w + 9 w^2 + 10 w^3 +w^4", "3 w +21 w^2+37 w^3+ 12 w^4"},
    {"2 w +12 w^2 +14 w^3 +4 w^4", "3 w+27 w^2+54 w^3+33 w^4+3 w^5"},
    {"2 w +13 w^2 + 22 w^3 +9 w^4", "-3 w+30 w^2+81 w^3+66 w^4+12 w^5"},
    {"2 w+ 16 w^2 +30w^3 +16 w^4 + 2w^5", "3w +36 w^2 +109 w^3 +114 w^4+39 w^5 +w^6"},
    {"2 w+ 17 w^2+40 w^3+30 w^4 + 4 w^5", "3 w+39 w^2 +144 w^3+ 189 w^4+81 w^5 +9 w^6"},
};

// QP_k(w,b,a), k = 0..8.
inline const std::vector<std::string> qp = {
    "1",
    "(a-b) w",
    "(a-b) (w + a w^2)",
    "(a-b) (w + (a-b) w^2+ a^2 w^3)",
    "(a-b) (w + (2a-b) w^2+ a (a-1) w^3 +a^3 w^4)",
    "(a-b) (w +2 (a-b) w^2+ 2a (a-b) w^3 +a^2 (a-b) w^4 +a^4 w^5)",
    "(a-b) (w + (3a-2b) w^2+ (3a^2-3a b+b^2) w^3 +2a^2 (a-b) w^4 + a^3(a-b) w^5+ a^5 w^6)",
    "(a-b) (w +3 (a-b) w^2+ (4a- b)(a-b) w^3 +(3a-b) (a-b) a w^4 + 2 a^3(a-b) w^5+ a^4 (a-b) w^6+ a^6 w^7)",
    "(a-b) (w +(4 a-3b) w^2+ (5a- 2 b)(a-b) w^3 +(5a^2-6 a b +2 b^2) a w^4 + a^2(3a-b) (a -b) w^5+ 2a^4 (a-b) w^6+ "
    "a^5(a-b) w^7 +a^7 w^8)",
};

// HP_k(w,x,y), k = 0..6.
inline const std::vector<std::string> hp = {
    "1",
    "(x-1)(y-1) w",
    "(x-1)(y-1)w (1+ (1 +x y )w )",
    "(x-1)(y-1)w (1+(x-1)(y-1) w +(1+ x y +x^2y^2) w^2 )",
    "(x-1)(y-1)w (1+(2-x-y+2x y) w +(x-1)(y-1)(1+x y) w^2 +(1+ x y +x^2y^2+x^3y^3) w^3 )",
    "(x-1)(y-1)w (1 +2(x-1)(y-1) w +2(x-1)(y-1)(1+x y) w^2 + (x-1) (y-1)(1+ x y +x^2y^2+x^3y^3) w^3 +(1+ x y "
    "+x^2y^2+x^3y^3 +x^4 y^4) w^4 )",
    "(x-1)(y-1)w ( 1+(3-2x-2y+3x y) w +(3-3x-3y+x^2+y^2 +21 x y-3x y^2-3 x^2 y+3 x^2 y^2) w^2 + (x-1) (y-1)(2+ 3 x y "
    "+2x^2y^2) w^3 +(x-1)(y-1) (1+ x y +x^2y^2 +x^3y^3) w^4 +(1+ x y+ x^2 y^2+ x^3 y^3 + x^4 y^4+x^5 y^5) w^5 )",
};

// Printed symbolic outputs. Comparisons drop all whitespace.
inline const std::string ds4 =
    "DS[4,n_]:= p[4,n] q[1] a + p[1,n] p[3,n] q[2] a^(2) 2! + p[1,n]^(2) p[2,n] q[3] a^(3) 3!/2! + p[1,n]^(4) q[4] "
    "a^(4) + p[2,n]^(2) q[2] a^(2)";
inline const std::string es4 =
    "ES[4,n_]:= -DS[0,0]^(-2) DS[4,n] + DS[0,0]^(-3) DS[1,n] DS[3,n] 2! - DS[0,0]^(-4) DS[1,n]^(2) DS[2,n] 3!/2! + "
    "DS[0,0]^(-5) DS[1,n]^(4) + DS[0,0]^(-3) DS[2,n]^(2)";
inline const std::string pfn6 =
    "p[6]:= ((-1)^(1)) ((-1)^(2)) (-1)^(2) 2! + ((-1)^(1))^(4) ((-1)^(1)) (-1)^(5) 5!/4! + ((-1)^(1))^(6) (-1)^(6) "
    "+ ((-1)^(1))^(2) ((-1)^(1))^(2) (-1)^(4) 4!/(2! 2!) + ((-1)^(1))^(3) (-1)^(3)";
inline const std::string dispfnpoly6 =
    "Q[6,-w_]:= DP[6,w] (-1) + DP[1,w] DP[5,w] (-1)^(2) + DP[1,w]^(2) DP[4,w] (-1)^(3)/2! + DP[1,w]^(3) DP[3,w] "
    "(-1)^(4)/3! + DP[1,w]^(4) DP[2,w] (-1)^(5)/4! + DP[1,w]^(6) (-1)^(6)/6! + DP[1,w]^(2) DP[2,w]^ (2) "
    "(-1)^(4)/(2! 2!) + DP[1,w] DP[2,w] DP[3,w] (-1)^(3) + DP[2,w] DP[4,w] (-1)^(2) + DP[2,w]^(3) (-1)^(3)/3! + "
    "DP[3,w]^(2) (-1)^(2)/2!\n\n"
    "P[6,w_]:= DP[6,w] + DP[1,w] DP[5,w] + DP[1,w]^(2) DP[4,w] /2! + DP[1,w]^(3) DP[3,w] /3! + DP[1,w]^(4) DP[2,w] "
    "/4! + DP[1,w]^(6) /6! + DP[1,w]^(2) DP[2,w]^(2) /(2! 2!) + DP[1,w] DP[2,w] DP[3,w] + DP[2,w] DP[4,w] + "
    "DP[2,w]^(3) /3! + DP[3,w]^(2) /2!";

inline std::string strip_ws(const std::string& s)
{
    std::string r;
    for (char c : s)
        if (c != ' ' && c != '\n' && c != '\t' && c != '\r')
            r += c;
    return r;
}

}  // namespace tables

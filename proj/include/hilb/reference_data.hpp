#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb::reference {

// Published minimal presentations of A(d) for d <= 10, as relation
// polynomials over the minimal generators.  Alphabets follow the published
// convention: (x,y,z,w) = (gamma_2..gamma_5) for d <= 8, (a,b,c,d,e) =
// (gamma_2..gamma_6) for d = 9, 10.  Chained-equality summaries are spelled
// out as explicit differences.
//
// Three printed lines are defective in the source and carried here verbatim:
// one line was typeset with a missing operator (both readings are stored and
// tested), and three coefficients/signs elsewhere are misprints whose unique
// vanishing correction on the same monomial support is stored alongside for
// reporting.  Verification verdicts always follow the printed text.
struct Relation {
    std::string text;
    std::string alternate;  // second printed reading for one d = 8 line; "" otherwise
    std::string corrected;  // vanishing correction of a misprinted line; "" otherwise
    bool ambiguous() const { return !alternate.empty(); }
};

inline const std::vector<Relation>& relations(int d) {
    static const std::map<int, std::vector<Relation>> table = {
        {1, {}},
        {2, {{"x^2", ""}}},
        {3, {{"x^3", ""}}},
        {4, {{"x^3-4xy", ""}, {"x^4", ""}, {"y^2", ""}}},
        {5, {{"x^4-5x^2y", ""}, {"x^4-25y^2", ""}, {"x^5", ""}}},
        {6,
         {{"x^4-11x^2y+24xz+6y^2", ""},
          {"x^5-6x^3y", ""},
          {"x^5-36x^2z", ""},
          {"x^5-216yz", ""},
          {"x^6", ""},
          {"z^2", ""}}},
        {7,
         {{"x^5-13x^3y+28x^2z+14xy^2", ""},
          {"11x^5-129x^3y+280x^2z+588yz", ""},
          {"x^6-7x^4y", ""},
          {"x^6-49x^3z", ""},
          {"x^6-343y^3", ""},
          {"x^6-2401z^2", ""},
          {"x^7", ""}}},
        {8,
         {{"x^5-21x^3y+92x^2z+54xy^2-240xw-96yz", ""},
          // printed with a missing operator between the last two terms;
          // both readings are carried and tested
          {"x^6-15x^4y+32x^3z+24x^2y^2", "x^6-15x^4y+32x^3z-24x^2y^2", ""},
          {"x^6+9x^4y-304x^3z+1440x^2w-96y^3", "", ""},
          {"x^6+87x^4y-1232x^3z+5472x^2w+5376yw", "",
           "x^6-87x^4y+1232x^3z-5472x^2w+5376yw"},
          {"17x^6-135x^4y+784x^3z+5760x^2w+3584z^3", "",
           "17x^6-135x^4y-784x^3z+5760x^2w+3584z^2"},
          {"x^7-8x^5y", ""},
          {"x^7-64x^4z", ""},
          {"x^7-512x^3w", ""},
          {"x^7-32768zw", ""},
          {"x^8", ""},
          {"w^2", ""}}},
        {9,
         {{"-a^6+24a^4b-104a^3c-87a^2b^2+270a^2d+216abc+18b^3", ""},
          {"-11a^6+258a^4b-1120a^3c-837a^2b^2+2910a^2d+1488abc+2160bd+864c^2", ""},
          {"a^7-17a^5b+36a^4c+36a^3b^2", ""},
          {"a^7-11a^5b-30a^4c+270a^3d+162a^2bc", ""},
          {"251a^7-3895a^5b+16284a^4c-50328a^3d+326592abd", ""},
          {"37a^7-1001a^5b+9636a^4c-37800a^3d+46656b^2c", ""},
          {"85a^7-857a^5b-2652a^4c+26712a^3d+373248cd", ""},
          {"a^8-9a^6b", ""},
          {"a^8-81a^5c", ""},
          {"a^8-729a^4d", ""},
          {"a^8-59049b^2d", ""},
          {"a^8-531441d^2", ""},
          {"a^9", ""}}},
        {10,
         {{"a^6-34a^4b+224a^3c+207a^2b^2-1170a^2d-1136abc+3360ae-108b^3+1200bd+480c^2", ""},
          {"-a^7+27a^5b-116a^4c-126a^3b^2+300a^3d+360a^2bc+60a^2e", "",
           "-a^7+27a^5b-116a^4c-126a^3b^2+300a^3d+360a^2bc+60ab^3"},
          {"-3a^7+86a^5b-468a^4c-393a^3b^2+1950a^3d+1420a^2bc-4200a^2e+600b^2c", ""},
          {"-7a^7+229a^5b-1652a^4c-1152a^3b^2+9450a^3d+6080a^2bc-29460a^2e-6600abd+21600be",
           ""},
          {"-59a^7+1283a^5b-2404a^4c-3654a^3b^2-18450a^3d-10040a^2bc+140700a^2e+46200abd+"
           "108000cd",
           ""},
          {"a^8-19a^6b+40a^5c+50a^4b^2", ""},
          {"7a^8-83a^6b-320a^5c+2500a^4d+2000a^3bc", ""},
          {"21a^8-249a^6b+40a^5c-5500a^4d+60000a^3e+30000a^2bd", ""},
          {"221a^8-2049a^6b-1960a^5c-167500a^4d+1680000a^3e+30000b^4", ""},
          {"1457a^8-14133a^6b-5320a^5c-1049500a^4d+10320000a^3e+2700000b^2d", ""},
          {"-2659a^8+10671a^6b+191840a^5c+2835500a^4d-32592000a^3e+97200000ce", ""},
          {"18341a^8-142329a^6b-813160a^5c-8483500a^4d+122640000a^3e+243000000d^2", ""},
          {"a^9-10a^7b", ""},
          {"a^9-100a^6c", ""},
          {"a^9-1000a^5d", ""},
          {"a^9-10^7de", ""},
          {"a^10", ""},
          {"e^2", ""}}},
    };
    auto it = table.find(d);
    if (it == table.end())
        throw std::invalid_argument("no reference presentation for d = " + std::to_string(d));
    return it->second;
}

// Reference table of minimal relation counts r_{d,n} for d = 1..10 (row
// sums are the published totals).
inline const std::map<int, std::map<std::int64_t, std::int64_t>>& relation_counts() {
    static const std::map<int, std::map<std::int64_t, std::int64_t>> table = {
        {1, {}},
        {2, {{2, 1}}},
        {3, {{3, 1}}},
        {4, {{3, 1}, {4, 2}}},
        {5, {{4, 2}, {5, 1}}},
        {6, {{4, 1}, {5, 3}, {6, 2}}},
        {7, {{5, 2}, {6, 4}, {7, 1}}},
        {8, {{5, 1}, {6, 4}, {7, 4}, {8, 2}}},
        {9, {{6, 2}, {7, 5}, {8, 5}, {9, 1}}},
        {10, {{6, 1}, {7, 4}, {8, 7}, {9, 4}, {10, 2}}},
    };
    return table;
}

}  // namespace hilb::reference

#include "tspread/m2.hpp"

#include <sstream>

namespace tspread {

namespace {

std::string m2_monomial(Mask m) {
    if (!m) return "1_S";
    std::string s;
    for (int i : indices_of(m)) {
        if (!s.empty()) s += '*';
        s += "x_" + std::to_string(i);
    }
    return s;
}

std::string m2_prime(Mask support) {
    std::string s = "ideal(";
    bool first = true;
    for (int i : indices_of(support)) {
        if (!first) s += ',';
        s += "x_" + std::to_string(i);
        first = false;
    }
    return s + ")";
}

}  // namespace

std::string m2_script(const LexsegmentSpec& spec, const MonomialIdeal& I,
                      const PrimeDecomposition& dec,
                      const std::optional<BettiTable>& betti) {
    std::ostringstream os;
    os << "-- generated by the tspread CLI; run with: M2 --script <file>\n";
    os << "-- segment: n=" << spec.n << " d=" << spec.d << " t=" << spec.t
       << " kind=" << kind_name(spec.kind) << " u=" << to_text(spec.u)
       << " v=" << to_text(spec.v) << "\n";
    os << "S = QQ[x_1..x_" << spec.n << "];\n";
    os << "I = ideal(";
    for (std::size_t k = 0; k < I.gens.size(); ++k)
        os << (k ? "," : "") << m2_monomial(I.gens[k]);
    os << ");\n";
    os << "D = intersect(";
    for (std::size_t k = 0; k < dec.primes.size(); ++k)
        os << (k ? "," : "") << m2_prime(dec.primes[k].support);
    os << ");\n";
    os << "assert(D == I);\n";
    os << "assert(#minimalPrimes I == " << dec.primes.size() << ");\n";
    if (betti) {
        os << "expectedBetti = new BettiTally from {";
        bool first = true;
        for (const auto& [k, v] : betti->entries) {
            if (!v) continue;
            os << (first ? "" : ", ") << "(" << k.first << ",{" << k.second << "}," << k.second
               << ") => " << v;
            first = false;
        }
        os << "};\n";
        os << "assert(betti res I === expectedBetti);\n";
    }
    os << "print \"ok\";\n";
    return os.str();
}

}  // namespace tspread

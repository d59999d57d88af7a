#include "ic/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace ic {

CnfInstance::CnfInstance(int alpha_, std::vector<Clause> clauses_)
    : alpha(alpha_), clauses(std::move(clauses_)) {
    if (alpha < 1) throw InputError("cnf: needs at least one variable");
    for (const auto& c : clauses) {
        if (c.empty()) throw InputError("cnf: empty clause");
        if (c.size() > 3) throw InputError("cnf: clause wider than 3 literals");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].var < 1 || c[i].var > alpha) throw InputError("cnf: variable out of range");
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (c[i].var == c[j].var && c[i].positive == c[j].positive)
                    throw InputError("cnf: duplicate literal in clause");
                if (c[i].var == c[j].var && c[i].positive != c[j].positive)
                    throw InputError("cnf: clause contains a variable and its negation");
            }
        }
    }
}

bool satisfies(const CnfInstance& inst, const Assignment& asg) {
    for (const auto& c : inst.clauses) {
        bool sat = false;
        for (const auto& lit : c)
            if (asg.get(lit.var) == lit.positive) { sat = true; break; }
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfInstance& inst) {
    if (inst.alpha > 24) throw InputError("brute_force_sat: alpha over the cap of 24");
    std::uint64_t total = std::uint64_t{1} << inst.alpha;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Assignment asg(inst.alpha);
        for (int v = 1; v <= inst.alpha; ++v)
            asg.set(v, (mask >> (v - 1)) & 1);
        if (satisfies(inst, asg)) return asg;
    }
    return std::nullopt;
}

CnfInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int alpha = -1, declared = -1;
    std::vector<Clause> clauses;
    Clause cur;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> alpha >> declared) || fmt != "cnf" || alpha < 1 || declared < 0)
                throw InputError("dimacs: malformed problem line");
            continue;
        }
        if (alpha < 0) throw InputError("dimacs: clause before problem line");
        std::istringstream ls(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (cur.empty()) throw InputError("dimacs: empty clause");
                clauses.push_back(cur);
                cur.clear();
            } else {
                int var = static_cast<int>(lit > 0 ? lit : -lit);
                if (var > alpha) throw InputError("dimacs: variable index out of range");
                cur.push_back({var, lit > 0});
                if (cur.size() > 3) throw InputError("dimacs: clause wider than 3 literals");
            }
        }
    }
    if (!cur.empty()) throw InputError("dimacs: clause missing terminating 0");
    if (declared >= 0 && declared != static_cast<int>(clauses.size()))
        throw InputError("dimacs: clause count does not match header");
    return CnfInstance(alpha, std::move(clauses));
}

std::string to_dimacs(const CnfInstance& inst) {
    std::ostringstream out;
    out << "p cnf " << inst.alpha << " " << inst.beta() << "\n";
    for (const auto& c : inst.clauses) {
        for (const auto& lit : c) out << (lit.positive ? "" : "-") << lit.var << " ";
        out << "0\n";
    }
    return out.str();
}

std::string cnf_digest(const CnfInstance& inst) {
    std::string s = to_dimacs(inst);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::vector<Clause> enumerate_clauses(int alpha) {
    std::vector<Literal> lits;
    for (int v = 1; v <= alpha; ++v) {
        lits.push_back({v, true});
        lits.push_back({v, false});
    }
    int n = static_cast<int>(lits.size());
    std::vector<Clause> out;
    auto compatible = [&](const Literal& a, const Literal& b) { return a.var != b.var; };
    for (int i = 0; i < n; ++i) out.push_back({lits[i]});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (compatible(lits[i], lits[j])) out.push_back({lits[i], lits[j]});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (compatible(lits[i], lits[j]) && compatible(lits[i], lits[k]) &&
                    compatible(lits[j], lits[k]))
                    out.push_back({lits[i], lits[j], lits[k]});
    return out;
}

CnfInstance sample_instance(int alpha, int beta, std::mt19937_64& rng) {
    std::vector<Clause> clauses;
    for (int i = 0; i < beta; ++i) {
        int width = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, alpha)));
        std::vector<int> vars(alpha);
        for (int v = 0; v < alpha; ++v) vars[v] = v + 1;
        std::shuffle(vars.begin(), vars.end(), rng);
        Clause c;
        for (int k = 0; k < width; ++k) c.push_back({vars[k], (rng() & 1) != 0});
        std::sort(c.begin(), c.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
        clauses.push_back(std::move(c));
    }
    return CnfInstance(alpha, std::move(clauses));
}

} // namespace ic

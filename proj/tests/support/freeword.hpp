#pragma once

// Independent normal-form oracle: reduces free *-words by literal string
// rewriting with the defining relations, leftmost reducible pair first.
// Shares no code with the closed-form monomial multiplication it checks.

#include <deque>
#include <vector>

#include "qinst/qalgebra.hpp"

namespace testsupport {

inline qinst::HElement freeword_reduce(const std::vector<qinst::FreeTerm>& expr) {
    using qinst::Gen;
    using qinst::QLaurent;
    struct Term {
        QLaurent coeff;
        std::vector<Gen> word;
    };
    std::deque<Term> work;
    for (const auto& t : expr) work.push_back({t.coeff, t.word});

    qinst::HElement out;
    while (!work.empty()) {
        Term t = std::move(work.front());
        work.pop_front();
        bool reduced = false;
        for (std::size_t i = 0; i + 1 < t.word.size() && !reduced; ++i) {
            Gen x = t.word[i], y = t.word[i + 1];
            auto swap_with = [&](int qexp) {
                Term s = t;
                std::swap(s.word[i], s.word[i + 1]);
                s.coeff = s.coeff.shifted(qexp);
                work.push_back(std::move(s));
                reduced = true;
            };
            auto contract = [&](const QLaurent& bbstar_coeff) {
                Term keep = t;  // drop the pair
                keep.word.erase(keep.word.begin() + long(i), keep.word.begin() + long(i) + 2);
                Term ins = keep;  // replace the pair by beta beta*
                ins.word.insert(ins.word.begin() + long(i), {Gen::Beta, Gen::BetaStar});
                ins.coeff = ins.coeff * bbstar_coeff;
                work.push_back(std::move(keep));
                work.push_back(std::move(ins));
                reduced = true;
            };
            if (x == Gen::Beta && y == Gen::Alpha) swap_with(-1);
            else if (x == Gen::BetaStar && y == Gen::Alpha) swap_with(-1);
            else if (x == Gen::Beta && y == Gen::AlphaStar) swap_with(1);
            else if (x == Gen::BetaStar && y == Gen::AlphaStar) swap_with(1);
            else if (x == Gen::BetaStar && y == Gen::Beta) swap_with(0);
            else if (x == Gen::Alpha && y == Gen::AlphaStar)
                contract(QLaurent::q_power(2, qinst::Rational(-1)));
            else if (x == Gen::AlphaStar && y == Gen::Alpha) contract(QLaurent(-1));
        }
        if (reduced) continue;
        // irreducible: word is alpha-block (single sign), betas, beta-stars
        qinst::PbwMono m;
        for (Gen g : t.word) {
            switch (g) {
                case Gen::Alpha: m.a += 1; break;
                case Gen::AlphaStar: m.a -= 1; break;
                case Gen::Beta: m.b += 1; break;
                case Gen::BetaStar: m.c += 1; break;
            }
        }
        out += qinst::HElement::monomial(m, t.coeff);
    }
    return out;
}

}  // namespace testsupport

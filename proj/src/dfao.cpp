#include "cobham/dfao.hpp"

#include "cobham/errors.hpp"
#include "cobham/numeration.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace cobham {

std::size_t Dfao::digit_slot(Digit d) const {
    if (d < base) return d;  // canonical digits are the smallest alphabet members
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), d);
    if (it == alphabet.end() || *it != d) return alphabet.size();
    return static_cast<std::size_t>(it - alphabet.begin());
}

State Dfao::step(State s, Digit d) const {
    return transitions[static_cast<std::size_t>(s) * alphabet.size() + digit_slot(d)];
}

bool Dfao::stable_initial() const {
    return step(initial, 0) == initial;
}

void validate_dfao(const Dfao& m, bool require_stable_initial) {
    if (m.base < 2) throw InvalidArgumentError("dfao: base must be at least 2");
    if (m.base >= (1u << 24)) throw InvalidArgumentError("dfao: base too large");
    if (m.outputs.empty()) throw InvalidArgumentError("dfao: at least one state required");
    if (!std::is_sorted(m.alphabet.begin(), m.alphabet.end()) ||
        std::adjacent_find(m.alphabet.begin(), m.alphabet.end()) != m.alphabet.end()) {
        throw InvalidArgumentError("dfao: alphabet must be sorted and duplicate-free");
    }
    for (Digit d = 0; d < m.base; ++d) {
        if (d >= m.alphabet.size() || m.alphabet[d] != d) {
            throw InvalidArgumentError(
                "dfao: alphabet must contain the canonical digits 0.." +
                std::to_string(m.base - 1));
        }
    }
    if (m.initial >= m.state_count()) {
        throw InvalidArgumentError("dfao: initial state out of range");
    }
    if (m.transitions.size() != m.state_count() * m.alphabet.size()) {
        throw InvalidArgumentError("dfao: transition table size mismatch");
    }
    for (State target : m.transitions) {
        if (target >= m.state_count()) {
            throw InvalidArgumentError("dfao: transition target out of range");
        }
    }
    if (require_stable_initial && !m.stable_initial()) {
        throw InvalidArgumentError(
            "dfao: transition(initial, 0) must return to the initial state");
    }
}

State run_from(const Dfao& m, State start, const Word& word) {
    State s = start;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const std::size_t slot = m.digit_slot(word[i]);
        if (slot == m.alphabet.size()) {
            throw InvalidDigitError("digit " + std::to_string(word[i]) + " at position " +
                                    std::to_string(i) + " is outside the alphabet");
        }
        s = m.transitions[static_cast<std::size_t>(s) * m.alphabet.size() + slot];
    }
    return s;
}

State run(const Dfao& m, const Word& word) {
    return run_from(m, m.initial, word);
}

const std::string& evaluate(const Dfao& m, const Int& x) {
    if (x < 0) throw InvalidArgumentError("evaluate: index must be a natural number");
    return m.outputs[run(m, canonical_repr(x, m.base))];
}

std::vector<State> canonical_state_table(const Dfao& m, std::size_t count) {
    std::vector<State> table;
    table.reserve(count);
    if (count == 0) return table;
    table.push_back(m.initial);  // x = 0, empty word
    for (std::size_t x = 1; x < count; ++x) {
        // repr(x) = repr(x / base) followed by the digit x % base
        table.push_back(m.step(table[x / m.base], static_cast<Digit>(x % m.base)));
    }
    return table;
}

namespace {

// Graph nodes for the leading-zero-aware reachability analysis: node 0 is
// the fresh start (nothing read yet), node 1+s is state s after a word with
// no leading zero. The fresh 0-self-loop is omitted on purpose: leading
// zeros never produce new values.
struct FlagGraph {
    std::vector<std::vector<std::uint32_t>> succ;

    explicit FlagGraph(const Dfao& m) : succ(m.state_count() + 1) {
        succ[0].reserve(m.base - 1);
        for (Digit d = 1; d < m.base; ++d) {
            succ[0].push_back(1 + m.step(m.initial, d));
        }
        for (State s = 0; s < m.state_count(); ++s) {
            succ[1 + s].reserve(m.base);
            for (Digit d = 0; d < m.base; ++d) {
                succ[1 + s].push_back(1 + m.step(s, d));
            }
        }
    }
};

std::vector<bool> reachable_from(const std::vector<std::vector<std::uint32_t>>& succ,
                                 std::vector<std::uint32_t> seeds) {
    std::vector<bool> seen(succ.size(), false);
    std::deque<std::uint32_t> queue;
    for (auto s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : succ[u]) {
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    return seen;
}

// Iterative Tarjan restricted to `alive` nodes; returns per-node flag "lies
// on a cycle" (non-trivial SCC or self-loop).
std::vector<bool> cyclic_nodes(const std::vector<std::vector<std::uint32_t>>& succ,
                               const std::vector<bool>& alive) {
    const std::uint32_t n = static_cast<std::uint32_t>(succ.size());
    constexpr std::uint32_t kUnvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false), cyclic(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t counter = 0;

    struct Frame {
        std::uint32_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> call;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (!alive[root] || index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& frame = call.back();
            const std::uint32_t u = frame.node;
            if (frame.next_edge < succ[u].size()) {
                const std::uint32_t v = succ[u][frame.next_edge++];
                if (!alive[v]) continue;
                if (index[v] == kUnvisited) {
                    index[v] = lowlink[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.push_back({v, 0});
                } else if (on_stack[v]) {
                    lowlink[u] = std::min(lowlink[u], index[v]);
                }
            } else {
                call.pop_back();
                if (!call.empty()) {
                    lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[u]);
                }
                if (lowlink[u] == index[u]) {
                    std::vector<std::uint32_t> component;
                    while (true) {
                        const std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component.push_back(w);
                        if (w == u) break;
                    }
                    bool has_cycle = component.size() > 1;
                    if (!has_cycle) {
                        for (auto v : succ[u]) {
                            if (v == u) has_cycle = true;
                        }
                    }
                    if (has_cycle) {
                        for (auto w : component) cyclic[w] = true;
                    }
                }
            }
        }
    }
    return cyclic;
}

}  // namespace

std::vector<State> infinite_canonical_states(const Dfao& m) {
    FlagGraph graph(m);
    const std::vector<bool> alive = reachable_from(graph.succ, {0});
    const std::vector<bool> cyclic = cyclic_nodes(graph.succ, alive);

    std::vector<std::uint32_t> seeds;
    for (std::uint32_t u = 0; u < cyclic.size(); ++u) {
        if (alive[u] && cyclic[u]) seeds.push_back(u);
    }
    const std::vector<bool> beyond_cycle = reachable_from(graph.succ, std::move(seeds));

    std::vector<State> result;
    for (State s = 0; s < m.state_count(); ++s) {
        if (beyond_cycle[1 + s]) result.push_back(s);
    }
    return result;
}

namespace {

struct MapHash {
    std::size_t operator()(const std::vector<State>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (State s : v) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

Dfao reverse_reading(const Dfao& m, std::size_t state_cap) {
    validate_dfao(m, /*require_stable_initial=*/false);
    const std::size_t k = m.state_count();
    const std::size_t width = m.alphabet.size();

    // State after reading suffix v in reverse is the map s -> delta(s, v);
    // consuming another digit d sends g to g o delta_d.
    std::unordered_map<std::vector<State>, State, MapHash> seen;
    std::vector<std::vector<State>> maps;

    std::vector<State> identity(k);
    for (std::size_t s = 0; s < k; ++s) identity[s] = static_cast<State>(s);
    seen.emplace(identity, 0);
    maps.push_back(std::move(identity));

    Dfao out;
    out.base = m.base;
    out.alphabet = m.alphabet;
    out.initial = 0;

    for (std::size_t g = 0; g < maps.size(); ++g) {
        for (std::size_t slot = 0; slot < width; ++slot) {
            std::vector<State> next(k);
            for (std::size_t s = 0; s < k; ++s) {
                next[s] = maps[g][m.transitions[s * width + slot]];
            }
            auto [it, inserted] = seen.emplace(std::move(next), static_cast<State>(maps.size()));
            if (inserted) {
                if (maps.size() >= state_cap) {
                    throw ResourceLimitError(
                        "reverse_reading: reachable map count exceeds cap of " +
                        std::to_string(state_cap));
                }
                maps.push_back(it->first);
            }
            out.transitions.push_back(it->second);
        }
    }

    out.outputs.reserve(maps.size());
    for (const auto& g : maps) {
        out.outputs.push_back(m.outputs[g[m.initial]]);
    }
    validate_dfao(out, /*require_stable_initial=*/false);
    return out;
}

Dfao build_periodic_dfao(const std::vector<std::string>& preperiod,
                         const std::vector<std::string>& period,
                         unsigned base) {
    if (period.empty()) throw InvalidArgumentError("build_periodic_dfao: period must be non-empty");
    if (base < 2) throw InvalidArgumentError("build_periodic_dfao: base must be at least 2");

    const std::size_t r = preperiod.size();
    const std::size_t q = period.size();

    // Track x under x -> x*base + d as the pair (min(x, r), x mod q); the
    // first component saturates at r, which is all the output table needs.
    // Digit 0 fixes x = 0, so the initial state is stable.
    auto pack = [&](std::size_t sat, std::size_t mod) { return sat * q + mod; };
    const std::size_t raw_count = (r + 1) * q;

    std::vector<State> raw_trans(raw_count * base);
    std::vector<std::string> raw_out(raw_count);
    for (std::size_t sat = 0; sat <= r; ++sat) {
        for (std::size_t mod = 0; mod < q; ++mod) {
            const std::size_t id = pack(sat, mod);
            raw_out[id] = (sat < r) ? preperiod[sat] : period[(q + mod - (r % q)) % q];
            for (Digit d = 0; d < base; ++d) {
                const std::size_t next_mod = (mod * base + d) % q;
                const std::size_t next_sat =
                    (sat < r) ? std::min(sat * base + d, r) : r;
                raw_trans[id * base + d] = static_cast<State>(pack(next_sat, next_mod));
            }
        }
    }

    // Prune to the reachable part, numbering states in BFS order.
    std::vector<State> renumber(raw_count, UINT32_MAX);
    std::vector<std::size_t> order;
    renumber[pack(0, 0)] = 0;
    order.push_back(pack(0, 0));
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Digit d = 0; d < base; ++d) {
            const State target = raw_trans[order[head] * base + d];
            if (renumber[target] == UINT32_MAX) {
                renumber[target] = static_cast<State>(order.size());
                order.push_back(target);
            }
        }
    }

    Dfao out;
    out.base = base;
    out.alphabet.resize(base);
    for (Digit d = 0; d < base; ++d) out.alphabet[d] = d;
    out.initial = 0;
    out.outputs.reserve(order.size());
    out.transitions.reserve(order.size() * base);
    for (std::size_t id : order) {
        out.outputs.push_back(raw_out[id]);
        for (Digit d = 0; d < base; ++d) {
            out.transitions.push_back(renumber[raw_trans[id * base + d]]);
        }
    }
    validate_dfao(out);
    return out;
}

}  // namespace cobham

// Copyright 2026 The ncomsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncomsim/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ncomsim {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i + 1)});
        i = j;
    }
    return out;
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size() || s.size() > 10) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = std::stoi(s);
    return true;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        std::string_view rest = text_;
        int line_no = 0;
        while (!rest.empty()) {
            size_t nl = rest.find('\n');
            std::string_view line = rest.substr(0, nl);
            rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
            ++line_no;
            handle_line(line, line_no);
        }
        finish();
        ParseResult r;
        r.diagnostics = std::move(diags_);
        if (r.diagnostics.empty()) r.circuit = std::move(c_);
        return r;
    }

  private:
    void err(int line, int col, const std::string& where, const std::string& msg) {
        diags_.push_back({where, msg, line, col});
    }

    void handle_line(std::string_view line, int line_no) {
        auto toks = tokenize(line);
        if (toks.empty()) return;
        const std::string& kw = toks[0].text;
        if (kw == "dim")
            handle_dim(toks, line_no);
        else if (kw == "wires")
            handle_wires(toks, line_no);
        else if (kw == "prep")
            handle_prep(toks, line_no);
        else if (kw == "gate")
            handle_gate(toks, line_no);
        else if (kw == "measure")
            handle_measure(toks, line_no);
        else
            err(line_no, toks[0].column, kw, "unknown directive");
    }

    // Header order is fixed: dim, then wires, each exactly once.
    void handle_dim(const std::vector<Token>& t, int line_no) {
        if (seen_dim_) return err(line_no, t[0].column, "dim", "duplicate dim line");
        int v = 0;
        if (t.size() != 2 || !parse_int(t[1].text, v) || v < 2)
            return err(line_no, t[0].column, "dim", "expected: dim <d> with d >= 2");
        seen_dim_ = true;
        c_.dim = v;
    }

    void handle_wires(const std::vector<Token>& t, int line_no) {
        if (!seen_dim_) return err(line_no, t[0].column, "wires", "wires must follow dim");
        if (seen_wires_) return err(line_no, t[0].column, "wires", "duplicate wires line");
        int v = 0;
        if (t.size() != 2 || !parse_int(t[1].text, v) || v < 1)
            return err(line_no, t[0].column, "wires", "expected: wires <n> with n >= 1");
        seen_wires_ = true;
        c_.n_wires = v;
    }

    bool header_ok(const Token& t, int line_no, const std::string& where) {
        if (seen_dim_ && seen_wires_) return true;
        err(line_no, t.column, where, "dim and wires lines must come first");
        return false;
    }

    bool wire_ok(const std::string& s, int line_no, int col, const std::string& where, int& w) {
        if (!parse_int(s, w) || w < 0 || w >= c_.n_wires) {
            err(line_no, col, where, "wire index out of range [0, " +
                                         std::to_string(c_.n_wires) + ")");
            return false;
        }
        return true;
    }

    void handle_prep(const std::vector<Token>& t, int line_no) {
        if (!header_ok(t[0], line_no, "prep")) return;
        if (seen_gate_ || seen_measure_)
            return err(line_no, t[0].column, "prep", "prep lines must precede gates and measure");
        if (t.size() != 4 || t[2].text != "basis")
            return err(line_no, t[0].column, "prep", "expected: prep <wire> basis <j>");
        int w = 0, j = 0;
        if (!wire_ok(t[1].text, line_no, t[1].column, "prep", w)) return;
        if (!parse_int(t[3].text, j) || j < 0 || j >= c_.dim)
            return err(line_no, t[3].column, "prep",
                       "basis label out of range [0, " + std::to_string(c_.dim) + ")");
        if (prepped_.count(w))
            return err(line_no, t[1].column, "prep",
                       "wire " + std::to_string(w) + " prepared twice");
        prepped_.insert(w);
        c_.preps.emplace_back(w, j);
    }

    void handle_gate(const std::vector<Token>& t, int line_no) {
        if (!header_ok(t[0], line_no, "gate")) return;
        if (seen_measure_)
            return err(line_no, t[0].column, "gate", "gates cannot follow measure");
        if (t.size() < 3)
            return err(line_no, t[0].column, "gate",
                       "expected: gate <NAME> <w1> [<w2>] [param <a>]");
        GateApp g;
        g.name = t[1].text;
        size_t i = 2;
        int w = 0;
        while (i < t.size() && parse_int(t[i].text, w)) {
            if (!wire_ok(t[i].text, line_no, t[i].column, "gate", w)) return;
            g.wires.push_back(w);
            ++i;
        }
        if (i < t.size()) {
            if (t[i].text != "param" || i + 2 != t.size())
                return err(line_no, t[i].column, "gate", "trailing tokens; expected: param <a>");
            int a = 0;
            if (!parse_int(t[i + 1].text, a))
                return err(line_no, t[i + 1].column, "gate", "param must be an integer");
            g.param = a;
        }
        if (g.wires.empty() || g.wires.size() > 2)
            return err(line_no, t[0].column, "gate", "gates take 1 or 2 wires");
        if (g.wires.size() == 2 && g.wires[0] == g.wires[1])
            return err(line_no, t[0].column, "gate", "two-wire gates need distinct wires");
        seen_gate_ = true;
        c_.gates.push_back(std::move(g));
    }

    void handle_measure(const std::vector<Token>& t, int line_no) {
        if (!header_ok(t[0], line_no, "measure")) return;
        if (seen_measure_)
            return err(line_no, t[0].column, "measure", "duplicate measure line");
        if (t.size() < 2)
            return err(line_no, t[0].column, "measure", "measure needs at least one wire");
        std::set<int> seen;
        for (size_t i = 1; i < t.size(); ++i) {
            int w = 0;
            if (!wire_ok(t[i].text, line_no, t[i].column, "measure", w)) return;
            if (!seen.insert(w).second)
                return err(line_no, t[i].column, "measure",
                           "wire " + std::to_string(w) + " measured twice");
            c_.measured.push_back(w);
        }
        seen_measure_ = true;
    }

    void finish() {
        if (!seen_dim_) diags_.push_back({"dim", "missing dim line"});
        if (!seen_wires_) diags_.push_back({"wires", "missing wires line"});
        if (!seen_measure_ && diags_.empty())
            diags_.push_back({"measure", "missing measure line"});
        if (!diags_.empty()) return;
        for (int w = 0; w < c_.n_wires; ++w)
            if (!prepped_.count(w))
                diags_.push_back({"prep", "wire " + std::to_string(w) + " has no prep line"});
    }

    std::string_view text_;
    Circuit c_;
    std::vector<Diagnostic> diags_;
    std::set<int> prepped_;
    bool seen_dim_ = false;
    bool seen_wires_ = false;
    bool seen_gate_ = false;
    bool seen_measure_ = false;
};

}  // namespace

ParseResult parse_circuit(std::string_view text) { return Parser(text).run(); }

std::string format_circuit(const Circuit& c) {
    std::ostringstream out;
    if (!c.name.empty()) out << "# " << c.name << "\n";
    out << "dim " << c.dim << "\n";
    out << "wires " << c.n_wires << "\n";
    for (const auto& [w, j] : c.preps) out << "prep " << w << " basis " << j << "\n";
    for (const auto& g : c.gates) {
        out << "gate " << g.name;
        for (int w : g.wires) out << " " << w;
        if (g.param) out << " param " << *g.param;
        out << "\n";
    }
    out << "measure";
    for (int w : c.measured) out << " " << w;
    out << "\n";
    return out.str();
}

Schedule schedule(const Circuit& c) {
    Schedule s;
    std::vector<size_t> next_free(c.n_wires, 0);  // first step where the wire is idle
    for (size_t i = 0; i < c.gates.size(); ++i) {
        size_t step = 0;
        for (int w : c.gates[i].wires) step = std::max(step, next_free[w]);
        if (step == s.steps.size()) s.steps.emplace_back();
        s.steps[step].push_back(i);
        for (int w : c.gates[i].wires) next_free[w] = step + 1;
    }
    return s;
}

std::string gate_key(const GateApp& g) {
    if (!g.param) return g.name;
    return g.name + "[" + std::to_string(*g.param) + "]";
}

std::vector<Diagnostic> validate_circuit(const Circuit& c, const GateSet& gate_set) {
    std::vector<Diagnostic> diags;
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const auto& g = c.gates[i];
        const std::string where = "gates[" + std::to_string(i) + "]";
        auto it = gate_set.find(gate_key(g));
        if (it == gate_set.end()) {
            diags.push_back({where, "gate " + gate_key(g) + " is not in the backend gate set"});
            continue;
        }
        if (static_cast<int>(g.wires.size()) != it->second.arity)
            diags.push_back({where, "gate " + gate_key(g) + " expects " +
                                        std::to_string(it->second.arity) + " wire(s), got " +
                                        std::to_string(g.wires.size())});
    }
    return diags;
}

}  // namespace ncomsim

#include "fmw/formula.hpp"

#include <algorithm>

namespace fmw {

Formula Formula::make(Node n) {
    switch (n.kind) {
        case NodeKind::atom:
        case NodeKind::equal:
            n.free.insert(n.args.begin(), n.args.end());
            n.rank = 0;
            break;
        case NodeKind::exists:
        case NodeKind::forall:
            n.free = n.children[0].free_variables();
            n.free.erase(n.symbol);
            n.rank = n.children[0].quantifier_rank() + 1;
            break;
        default:
            for (const auto& c : n.children) {
                n.free.insert(c.free_variables().begin(), c.free_variables().end());
                n.rank = std::max(n.rank, c.quantifier_rank());
            }
    }
    return Formula(std::make_shared<const Node>(std::move(n)));
}

bool Formula::is_literal() const {
    if (kind() == NodeKind::atom || kind() == NodeKind::equal) return true;
    return kind() == NodeKind::negation &&
           (child().kind() == NodeKind::atom || child().kind() == NodeKind::equal);
}

bool Formula::operator==(const Formula& other) const {
    if (n_ == other.n_) return true;
    return n_->kind == other.n_->kind && n_->symbol == other.n_->symbol && n_->args == other.n_->args &&
           n_->children == other.n_->children;
}

Formula atom(std::string symbol, std::vector<std::string> args) {
    return Formula::make({NodeKind::atom, std::move(symbol), std::move(args), {}, {}, 0});
}

Formula equal(std::string x, std::string y) {
    return Formula::make({NodeKind::equal, {}, {std::move(x), std::move(y)}, {}, {}, 0});
}

Formula negation(Formula f) { return Formula::make({NodeKind::negation, {}, {}, {std::move(f)}, {}, 0}); }

namespace {

std::vector<Formula> flatten(NodeKind kind, std::vector<Formula> parts) {
    std::vector<Formula> out;
    for (auto& p : parts) {
        if (p.kind() == kind)
            out.insert(out.end(), p.children().begin(), p.children().end());
        else
            out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

Formula conj(std::vector<Formula> parts) {
    auto flat = flatten(NodeKind::conjunction, std::move(parts));
    if (flat.size() == 1) return flat.front();
    return Formula::make({NodeKind::conjunction, {}, {}, std::move(flat), {}, 0});
}

Formula disj(std::vector<Formula> parts) {
    auto flat = flatten(NodeKind::disjunction, std::move(parts));
    if (flat.size() == 1) return flat.front();
    return Formula::make({NodeKind::disjunction, {}, {}, std::move(flat), {}, 0});
}

Formula implies(Formula a, Formula b) {
    return Formula::make({NodeKind::implication, {}, {}, {std::move(a), std::move(b)}, {}, 0});
}

Formula exists(std::string var, Formula body) {
    return Formula::make({NodeKind::exists, std::move(var), {}, {std::move(body)}, {}, 0});
}

Formula forall(std::string var, Formula body) {
    return Formula::make({NodeKind::forall, std::move(var), {}, {std::move(body)}, {}, 0});
}

Formula top() { return conj({}); }
Formula bottom() { return disj({}); }

namespace {

// Binding strength used by the printer; quantifiers are handled separately
// because their scope extends as far right as possible.
int precedence(const Formula& f) {
    switch (f.kind()) {
        case NodeKind::implication: return 1;
        case NodeKind::disjunction: return f.children().empty() ? 5 : 2;
        case NodeKind::conjunction: return f.children().empty() ? 5 : 3;
        case NodeKind::negation: return 4;
        default: return 5;
    }
}

void print(const Formula& f, int context, bool rightmost, std::string& out) {
    const bool quantifier = f.kind() == NodeKind::exists || f.kind() == NodeKind::forall;
    const bool parens = quantifier ? !rightmost : precedence(f) < context;
    if (parens) {
        out += '(';
        rightmost = true;
    }
    switch (f.kind()) {
        case NodeKind::atom: {
            out += f.symbol();
            out += '(';
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                if (i) out += ',';
                out += f.args()[i];
            }
            out += ')';
            break;
        }
        case NodeKind::equal:
            out += f.args()[0] + "=" + f.args()[1];
            break;
        case NodeKind::negation:
            out += '!';
            print(f.child(), 4, rightmost, out);
            break;
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            if (f.children().empty()) {
                out += f.kind() == NodeKind::conjunction ? "true" : "false";
                break;
            }
            const bool is_and = f.kind() == NodeKind::conjunction;
            for (std::size_t i = 0; i < f.children().size(); ++i) {
                if (i) out += is_and ? " & " : " | ";
                print(f.children()[i], is_and ? 4 : 3, rightmost && i + 1 == f.children().size(), out);
            }
            break;
        }
        case NodeKind::implication:
            print(f.child(0), 2, false, out);
            out += " -> ";
            print(f.child(1), 1, rightmost, out);
            break;
        case NodeKind::exists:
        case NodeKind::forall:
            out += f.kind() == NodeKind::exists ? "E " : "A ";
            out += f.var();
            out += ". ";
            print(f.child(), 0, true, out);
            break;
    }
    if (parens) out += ')';
}

void collect_symbols(const Formula& f, std::map<std::string, int>& out) {
    if (f.kind() == NodeKind::atom) {
        out.emplace(f.symbol(), static_cast<int>(f.args().size()));
        return;
    }
    for (const auto& c : f.children()) collect_symbols(c, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
    out.insert(f.args().begin(), f.args().end());
    if (f.kind() == NodeKind::exists || f.kind() == NodeKind::forall) out.insert(f.var());
    for (const auto& c : f.children()) collect_names(c, out);
}

Formula rebuild(const Formula& f, std::vector<Formula> children) {
    switch (f.kind()) {
        case NodeKind::negation: return negation(std::move(children[0]));
        case NodeKind::conjunction: return conj(std::move(children));
        case NodeKind::disjunction: return disj(std::move(children));
        case NodeKind::implication: return implies(std::move(children[0]), std::move(children[1]));
        case NodeKind::exists: return exists(f.var(), std::move(children[0]));
        case NodeKind::forall: return forall(f.var(), std::move(children[0]));
        default: return f;
    }
}

Formula substitute_impl(const Formula& f, std::map<std::string, std::string> ren, std::set<std::string>& taken) {
    auto rename = [&](const std::string& v) {
        auto it = ren.find(v);
        return it == ren.end() ? v : it->second;
    };
    switch (f.kind()) {
        case NodeKind::atom: {
            std::vector<std::string> args;
            for (const auto& a : f.args()) args.push_back(rename(a));
            return atom(f.symbol(), std::move(args));
        }
        case NodeKind::equal:
            return equal(rename(f.args()[0]), rename(f.args()[1]));
        case NodeKind::exists:
        case NodeKind::forall: {
            ren.erase(f.var());
            std::string bound = f.var();
            bool clash = false;
            for (const auto& v : f.child().free_variables()) {
                auto it = ren.find(v);
                if (it != ren.end() && it->second == bound) clash = true;
            }
            if (clash) {
                int k = 1;
                while (taken.count("_w" + std::to_string(k))) ++k;
                std::string fresh = "_w" + std::to_string(k);
                taken.insert(fresh);
                ren[bound] = fresh;
                bound = fresh;
            }
            Formula body = substitute_impl(f.child(), ren, taken);
            return f.kind() == NodeKind::exists ? exists(bound, body) : forall(bound, body);
        }
        default: {
            std::vector<Formula> cs;
            for (const auto& c : f.children()) cs.push_back(substitute_impl(c, ren, taken));
            return rebuild(f, std::move(cs));
        }
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    print(*this, 0, true, out);
    return out;
}

std::map<std::string, int> symbols_used(const Formula& f) {
    std::map<std::string, int> out;
    collect_symbols(f, out);
    return out;
}

Formula tilde(const Formula& f) {
    if (f.kind() == NodeKind::equal) return atom("s", f.args());
    if (f.kind() == NodeKind::atom) return f;
    std::vector<Formula> cs;
    for (const auto& c : f.children()) cs.push_back(tilde(c));
    return rebuild(f, std::move(cs));
}

Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming) {
    std::set<std::string> taken;
    collect_names(f, taken);
    for (const auto& [from, to] : renaming) taken.insert(to);
    return substitute_impl(f, renaming, taken);
}

}  // namespace fmw

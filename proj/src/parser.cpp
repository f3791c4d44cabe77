#include "relprop/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "relprop/errors.hpp"

namespace relprop {

namespace {

enum class Tok { Name, Variable, Number, LParen, RParen, Comma, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') return advance(), Token{Tok::LParen, "(", line, col};
        if (c == ')') return advance(), Token{Tok::RParen, ")", line, col};
        if (c == ',') return advance(), Token{Tok::Comma, ",", line, col};
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && peek_digit(1))) {
            return lex_number(line, col);
        }
        if (c == '.') return advance(), Token{Tok::Dot, ".", line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word += text_[pos_];
                advance();
            }
            Tok kind = is_variable_name(word) ? Tok::Variable : Tok::Name;
            return {kind, word, line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    bool peek_digit(size_t ahead) const {
        return pos_ + ahead < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + ahead]));
    }

    Token lex_number(int line, int col) {
        std::string word;
        if (text_[pos_] == '-') {
            word += '-';
            advance();
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            word += text_[pos_];
            advance();
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            word += '.';
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                word += text_[pos_];
                advance();
            }
        }
        return {Tok::Number, word, line, col};
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    bool at_end() const { return cur_.kind == Tok::End; }
    const Token& cur() const { return cur_; }

    Token expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            throw ParseError(cur_.line, cur_.col,
                             std::string("expected ") + what + ", found " + describe(cur_));
        }
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    bool accept(Tok kind) {
        if (cur_.kind != kind) return false;
        cur_ = lex_.next();
        return true;
    }

    /// name(arg, ..., arg) with variable, name, or number args.
    Atom parse_atom() {
        Token head = expect(Tok::Name, "a predicate name");
        Atom a;
        a.predicate = head.text;
        expect(Tok::LParen, "'('");
        while (true) {
            Token t = cur_;
            if (t.kind == Tok::Variable) {
                a.args.push_back(make_var(t.text));
            } else if (t.kind == Tok::Name || t.kind == Tok::Number) {
                a.args.push_back(make_const(t.text));
            } else {
                throw ParseError(t.line, t.col, "expected an argument, found " + describe(t));
            }
            cur_ = lex_.next();
            if (accept(Tok::Comma)) continue;
            break;
        }
        expect(Tok::RParen, "')'");
        return a;
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::End: return "end of input";
            case Tok::LParen: return "'('";
            case Tok::RParen: return "')'";
            case Tok::Comma: return "','";
            case Tok::Dot: return "'.'";
            default: return "'" + t.text + "'";
        }
    }

private:
    Lexer lex_;
    Token cur_;
};

struct RawClause {
    Atom atom;
    int line;
    int col;
};

std::vector<RawClause> parse_clauses(const std::string& text) {
    Parser p(text);
    std::vector<RawClause> clauses;
    while (!p.at_end()) {
        int line = p.cur().line, col = p.cur().col;
        Atom a = p.parse_atom();
        p.expect(Tok::Dot, "'.' after clause");
        clauses.push_back({std::move(a), line, col});
    }
    return clauses;
}

const BiasDecl* find_decl(const std::vector<BiasDecl>& bias, const std::string& pred) {
    for (const BiasDecl& d : bias) {
        if (d.predicate == pred) return &d;
    }
    return nullptr;
}

Dataset assemble_dataset(const std::vector<RawClause>& clauses,
                         const std::vector<BiasDecl>& bias,
                         const std::vector<std::string>* fixed_classes) {
    Dataset ds;
    std::map<std::string, int> example_slot;
    std::map<std::string, int> class_index;
    if (fixed_classes) {
        ds.class_names = *fixed_classes;
        for (size_t j = 0; j < ds.class_names.size(); ++j) {
            class_index[ds.class_names[j]] = static_cast<int>(j) + 1;
        }
    }

    for (const RawClause& c : clauses) {
        if (c.atom.predicate != "example") continue;
        if (c.atom.arity() != 2) {
            throw ParseError(c.line, c.col, "example/"+ std::to_string(c.atom.arity()) +
                                                " declared; example takes (id, label)");
        }
        if (!c.atom.is_ground()) {
            throw ParseError(c.line, c.col, "example declaration must be ground");
        }
        const std::string& id = c.atom.args[0].name;
        const std::string& label = c.atom.args[1].name;
        if (example_slot.count(id)) {
            throw ParseError(c.line, c.col, "duplicate example id '" + id + "'");
        }
        int cls;
        auto it = class_index.find(label);
        if (it != class_index.end()) {
            cls = it->second;
        } else if (fixed_classes) {
            cls = 0;  // unknown label in prediction data
        } else {
            ds.class_names.push_back(label);
            cls = static_cast<int>(ds.class_names.size());
            class_index[label] = cls;
        }
        example_slot[id] = static_cast<int>(ds.examples.size());
        ds.examples.push_back(Example{id, {}, cls});
    }

    if (ds.examples.empty()) throw DataError("no examples declared");

    for (const RawClause& c : clauses) {
        if (c.atom.predicate == "example") continue;
        const BiasDecl* decl = find_decl(bias, c.atom.predicate);
        if (!decl) {
            throw DataError("line " + std::to_string(c.line) + ": predicate '" +
                            c.atom.predicate + "' has no bias declaration");
        }
        if (decl->arity() != c.atom.arity()) {
            throw DataError("line " + std::to_string(c.line) + ": predicate '" +
                            c.atom.predicate + "' declared with arity " +
                            std::to_string(decl->arity()) + ", used with arity " +
                            std::to_string(c.atom.arity()));
        }
        if (!c.atom.is_ground()) {
            throw DataError("line " + std::to_string(c.line) + ": facts must be ground");
        }
        const std::string& key = c.atom.args[decl->key_positions.front()].name;
        auto it = example_slot.find(key);
        if (it == example_slot.end()) {
            throw DataError("line " + std::to_string(c.line) + ": unknown example ID '" +
                            key + "'");
        }
        std::vector<Atom>& facts = ds.examples[it->second].facts;
        if (std::find(facts.begin(), facts.end(), c.atom) == facts.end()) {
            facts.push_back(c.atom);
        }
    }

    ds.num_classes = static_cast<int>(ds.class_names.size());
    return ds;
}

}  // namespace

std::vector<BiasDecl> parse_bias(const std::string& bias_text) {
    Parser p(bias_text);
    std::vector<BiasDecl> bias;
    std::set<std::string> seen;
    while (!p.at_end()) {
        int line = p.cur().line, col = p.cur().col;
        Token head = p.expect(Tok::Name, "'decl'");
        if (head.text != "decl") {
            throw ParseError(head.line, head.col, "expected 'decl', found '" + head.text + "'");
        }
        p.expect(Tok::LParen, "'('");
        Token pred = p.expect(Tok::Name, "a predicate name");
        BiasDecl d;
        d.predicate = pred.text;
        p.expect(Tok::LParen, "'('");
        while (true) {
            Token t = p.expect(Tok::Name, "a type name");
            if (t.text == "key") d.key_positions.push_back(static_cast<int>(d.arg_types.size()));
            d.arg_types.push_back(t.text);
            if (p.accept(Tok::Comma)) continue;
            break;
        }
        p.expect(Tok::RParen, "')'");
        p.expect(Tok::RParen, "')'");
        p.expect(Tok::Dot, "'.' after declaration");

        if (d.predicate == "example" || d.predicate == "decl") {
            throw ParseError(line, col, "'" + d.predicate + "' is a reserved predicate name");
        }
        if (!seen.insert(d.predicate).second) {
            throw ParseError(line, col, "duplicate declaration for predicate '" +
                                            d.predicate + "'");
        }
        if (d.key_positions.size() != 1) {
            throw ParseError(line, col, "predicate '" + d.predicate +
                                            "' must type exactly one argument as 'key'");
        }
        bias.push_back(std::move(d));
    }
    return bias;
}

ParsedDataset parse_dataset(const std::string& facts_text, const std::string& bias_text) {
    ParsedDataset out;
    out.bias = parse_bias(bias_text);
    out.dataset = assemble_dataset(parse_clauses(facts_text), out.bias, nullptr);
    if (out.dataset.num_classes < 2) {
        throw DataError("dataset declares only " + std::to_string(out.dataset.num_classes) +
                        " class; at least 2 are required");
    }
    return out;
}

Dataset parse_dataset_with_classes(const std::string& facts_text,
                                   const std::vector<BiasDecl>& bias,
                                   const std::vector<std::string>& class_names) {
    Dataset ds = assemble_dataset(parse_clauses(facts_text), bias, &class_names);
    return ds;
}

Query parse_query(const std::string& text) {
    Parser p(text);
    std::vector<Atom> atoms;
    std::vector<std::pair<int, int>> positions;
    while (true) {
        positions.emplace_back(p.cur().line, p.cur().col);
        atoms.push_back(p.parse_atom());
        if (p.accept(Tok::Comma)) continue;
        break;
    }
    p.accept(Tok::Dot);
    if (!p.at_end()) {
        throw ParseError(p.cur().line, p.cur().col,
                         "unexpected input after query: " + Parser::describe(p.cur()));
    }

    Query q = make_query(std::move(atoms));
    // Linkedness check, reporting the first offending atom.
    std::set<std::string> seen;
    for (size_t k = 0; k < q.atoms.size(); ++k) {
        bool shares = false;
        for (const Term& t : q.atoms[k].args) {
            if (t.is_variable() && seen.count(t.name)) shares = true;
        }
        if (k > 0 && !shares) {
            throw ParseError(positions[k].first, positions[k].second,
                             "atom shares no variable with the preceding atoms");
        }
        for (const Term& t : q.atoms[k].args) {
            if (t.is_variable()) seen.insert(t.name);
        }
    }
    return q;
}

}  // namespace relprop

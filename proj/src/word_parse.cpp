#include "burau/braid.hpp"
#include "burau/errors.hpp"

#include <cctype>

namespace burau {

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, const Bindings& bindings) : s_(text), n_(n), bindings_(bindings) {}

    BraidWord parse()
    {
        skip_ws();
        BraidWord w = at_end() ? BraidWord(n_) : word();
        skip_ws();
        if (!at_end())
            fail({"term", "end of input"}, "unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char peek_at(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const
    {
        throw ParseError(pos_, std::move(expected), detail);
    }

    static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    bool starts_atom() const
    {
        const char c = peek();
        return c == '[' || c == '(' || name_start(c);
    }

    BraidWord word()
    {
        std::vector<BraidWord> terms;
        skip_ws();
        while (starts_atom()) {
            terms.push_back(term());
            skip_ws();
        }
        if (terms.empty())
            fail({"s<i>", "S<i>", "A<i><j>", "[", "(", "NAME"}, "empty word");
        return terms.size() == 1 ? terms[0] : BraidWord::product(n_, terms);
    }

    BraidWord term()
    {
        BraidWord a = atom();
        if (peek() == '^') {
            ++pos_;
            a = a.power(integer());
        }
        return a;
    }

    long long integer()
    {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail({"integer"}, "missing exponent");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > 100000000000LL)
                fail({"integer"}, "exponent too large");
            v = v * 10 + (s_[pos_++] - '0');
        }
        return neg ? -v : v;
    }

    int index()
    {
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return s_[pos_++] - '0';
        if (peek() != '(')
            fail({"digit", "(digits)"}, "missing index");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail({"digit"}, "missing index");
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > 1000000)
                fail({")"}, "index too large");
            v = v * 10 + (s_[pos_++] - '0');
        }
        if (peek() != ')')
            fail({")"}, "unterminated index");
        ++pos_;
        return v;
    }

    BraidWord atom()
    {
        const char c = peek();
        const char next = peek_at(1);
        const bool indexed = std::isdigit(static_cast<unsigned char>(next)) || next == '(';
        if ((c == 's' || c == 'S') && indexed) {
            const std::size_t at = pos_;
            ++pos_;
            const int i = index();
            if (i < 1 || i > n_ - 1) {
                pos_ = at;
                throw IndexOutOfRange("generator index " + std::to_string(i) + " at position " +
                                      std::to_string(at) + " out of range 1.." + std::to_string(n_ - 1));
            }
            return BraidWord::generator(n_, i, c == 's' ? 1 : -1);
        }
        if (c == 'A' && indexed) {
            const std::size_t at = pos_;
            ++pos_;
            int i = index();
            int j = index();
            if (i == j)
                throw ParseError(at, {"distinct indices"}, "A with equal indices");
            if (i > j)
                std::swap(i, j);
            if (i < 1 || j > n_)
                throw IndexOutOfRange("pure generator A" + std::to_string(i) + "," + std::to_string(j) +
                                      " at position " + std::to_string(at) + " out of range for n = " +
                                      std::to_string(n_));
            return pure_gen_word(i, j, n_);
        }
        if (c == '[') {
            ++pos_;
            BraidWord a = word();
            if (peek() != ',')
                fail({",", "term"}, "expected ',' in commutator");
            ++pos_;
            BraidWord b = word();
            if (peek() != ']')
                fail({"]", "term"}, "unterminated commutator");
            ++pos_;
            return BraidWord::commutator(a, b);
        }
        if (c == '(') {
            ++pos_;
            skip_ws();
            if (peek() == ')') {
                ++pos_;
                return BraidWord(n_);
            }
            BraidWord a = word();
            if (peek() != ')')
                fail({")", "term"}, "unterminated group");
            ++pos_;
            return a;
        }
        if (name_start(c)) {
            const std::size_t at = pos_;
            while (name_char(peek()))
                ++pos_;
            const std::string name = s_.substr(at, pos_ - at);
            auto it = bindings_.find(name);
            if (it == bindings_.end()) {
                pos_ = at;
                fail({"bound NAME"}, "unknown name '" + name + "'");
            }
            if (it->second.strands() != n_)
                throw StrandMismatch("binding '" + name + "' has " + std::to_string(it->second.strands()) +
                                     " strands, expected " + std::to_string(n_));
            return it->second;
        }
        fail({"s<i>", "S<i>", "A<i><j>", "[", "(", "NAME"}, at_end() ? "unexpected end of input"
                                                                      : "unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_;
    const Bindings& bindings_;
};

}  // namespace

BraidWord parse_word(const std::string& text, int n, const Bindings& bindings)
{
    if (n < 1)
        throw IndexOutOfRange("strand count must be positive");
    return Parser(text, n, bindings).parse();
}

BraidWord parse_word_with(const std::string& text, int n,
                          const std::vector<std::pair<std::string, std::string>>& lets, Bindings base)
{
    for (const auto& [name, body] : lets)
        base[name] = parse_word(body, n, base).named(name);
    return parse_word(text, n, base);
}

}  // namespace burau

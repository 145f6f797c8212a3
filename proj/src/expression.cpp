#include "frobform/expression.hpp"

#include <cctype>

#include "frobform/error.hpp"

namespace frobform {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const Algebra &a) : text_(text), a_(a) {}

    Element parse() {
        Element e = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::SyntaxError, "position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    // expr := term (('+' | '-') term)*
    Element expr() {
        Element acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    // term := '-'? product
    Element term() {
        if (accept('-'))
            return -term();
        return product();
    }

    // product := power ('*' power)*
    Element product() {
        Element acc = power();
        while (accept('*'))
            acc = acc * power();
        return acc;
    }

    // power := atom ('^' INT)?
    Element power() {
        Element base = atom();
        if (accept('^')) {
            skip_space();
            std::string_view d = digits();
            if (d.empty())
                fail("expected a nonnegative integer exponent");
            if (d.size() > 9)
                fail("exponent too large");
            base = base.pow(std::stoul(std::string(d)));
        }
        return base;
    }

    // atom := NUM ('/' NUM)? | IDENT | '(' expr ')'
    Element atom() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal(digits());
            std::size_t save = pos_;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                std::string_view den = digits();
                if (den.empty())
                    fail("expected a denominator");
                literal += "/" + std::string(den);
            } else {
                pos_ = save;
            }
            try {
                return a_.scalar(Scalar::parse(a_.field(), literal));
            } catch (const Error &e) {
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = a_.basis_index(name);
            if (!idx)
                throw Error(ErrorCode::UnknownBasisName, "unknown basis name '" + name + "' at position " +
                                                             std::to_string(start));
            return a_.basis_element(*idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Algebra &a_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(std::string_view text, const Algebra &a) { return Parser(text, a).parse(); }

} // namespace frobform

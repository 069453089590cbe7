#include "fracsub/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace fracsub {

namespace {

enum class Op { Num, VarX, VarT, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Gamma };

}  // namespace

struct Expr::Node {
    Op op;
    double value = 0.0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr)
{
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr number(double v)
{
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::Num;
    n->value = v;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr run()
    {
        NodePtr e = sum();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                    ": " + what + " in \"" + s_ + "\"");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr sum()
    {
        NodePtr e = product();
        for (;;) {
            if (eat('+')) e = make(Op::Add, e, product());
            else if (eat('-')) e = make(Op::Sub, e, product());
            else return e;
        }
    }

    NodePtr product()
    {
        NodePtr e = unary();
        for (;;) {
            if (eat('*')) e = make(Op::Mul, e, unary());
            else if (eat('/')) e = make(Op::Div, e, unary());
            else return e;
        }
    }

    NodePtr unary()
    {
        if (eat('-')) return make(Op::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (eat('^')) return make(Op::Pow, base, unary());  // right associative
        return base;
    }

    NodePtr atom()
    {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = sum();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return number(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (name == "x") return make(Op::VarX);
            if (name == "t") return make(Op::VarT);
            if (name == "pi") return number(M_PI);
            if (name == "pow") {
                if (!eat('(')) fail("pow expects '('");
                NodePtr a = sum();
                if (!eat(',')) fail("pow expects two arguments");
                NodePtr b = sum();
                if (!eat(')')) fail("missing ')'");
                return make(Op::Pow, a, b);
            }
            Op op;
            if (name == "sin") op = Op::Sin;
            else if (name == "cos") op = Op::Cos;
            else if (name == "exp") op = Op::Exp;
            else if (name == "gamma") op = Op::Gamma;
            else fail("unknown name '" + name + "'");
            if (!eat('(')) fail(name + " expects '('");
            NodePtr a = sum();
            if (!eat(')')) fail("missing ')'");
            return make(op, a);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

double eval(const Expr::Node& n, double x, double t)
{
    switch (n.op) {
        case Op::Num:   return n.value;
        case Op::VarX:  return x;
        case Op::VarT:  return t;
        case Op::Add:   return eval(*n.a, x, t) + eval(*n.b, x, t);
        case Op::Sub:   return eval(*n.a, x, t) - eval(*n.b, x, t);
        case Op::Mul:   return eval(*n.a, x, t) * eval(*n.b, x, t);
        case Op::Div:   return eval(*n.a, x, t) / eval(*n.b, x, t);
        case Op::Pow:   return std::pow(eval(*n.a, x, t), eval(*n.b, x, t));
        case Op::Neg:   return -eval(*n.a, x, t);
        case Op::Sin:   return std::sin(eval(*n.a, x, t));
        case Op::Cos:   return std::cos(eval(*n.a, x, t));
        case Op::Exp:   return std::exp(eval(*n.a, x, t));
        case Op::Gamma: return std::tgamma(eval(*n.a, x, t));
    }
    return 0.0;
}

}  // namespace

Expr Expr::parse(const std::string& text)
{
    Expr e;
    e.root_ = Parser(text).run();
    e.text_ = text;
    return e;
}

double Expr::operator()(double x, double t) const
{
    return eval(*root_, x, t);
}

}  // namespace fracsub

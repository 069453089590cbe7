#pragma once

#include <memory>
#include <string>

namespace fracsub {

// Arithmetic expressions in the variables x and t for user problem files.
// Grammar: + - * / ^, unary minus, parentheses, numeric literals, pi,
// and the functions sin, cos, exp, gamma, pow(a, b).
class Expr {
public:
    static Expr parse(const std::string& text);  // throws std::invalid_argument

    double operator()(double x, double t) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace fracsub

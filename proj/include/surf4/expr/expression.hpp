#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surf4/expr/jet.hpp"

namespace surf4::expr {

/// Named real constants referenced by expressions (alpha, beta, a, b, c, ...).
class ConstantBindings {
public:
    ConstantBindings() = default;
    ConstantBindings(std::initializer_list<std::pair<const std::string, double>> init);

    /// Adds a binding; rebinding an existing name is an InputError.
    void bind(const std::string& name, double value);
    [[nodiscard]] bool contains(std::string_view name) const;
    /// Throws InputError for unbound names.
    [[nodiscard]] double at(std::string_view name) const;
    [[nodiscard]] const std::map<std::string, double, std::less<>>& values() const { return values_; }
    [[nodiscard]] bool empty() const { return values_.empty(); }

private:
    std::map<std::string, double, std::less<>> values_;
};

enum class Variable { U, V };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Tan, Exp, Ln, Sqrt, Sinh, Cosh, Abs, Pow };

std::string_view function_name(Function f);
std::optional<Function> function_from_name(std::string_view name);
std::size_t function_arity(Function f);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    struct Number { double value; };
    struct Var { Variable var; };
    struct Constant { std::string name; };
    struct Negate { NodePtr operand; };
    struct Binary { BinaryOp op; NodePtr lhs, rhs; };
    struct Call { Function fn; std::vector<NodePtr> args; };

    std::variant<Number, Var, Constant, Negate, Binary, Call> data;
};

/// Immutable expression tree over u, v and named constants.
///
/// Copies share the underlying nodes; nothing ever mutates them, so an
/// Expression can be evaluated concurrently from any number of threads.
class Expression {
public:
    explicit Expression(NodePtr root);

    [[nodiscard]] const Node& root() const { return *root_; }
    [[nodiscard]] const NodePtr& root_ptr() const { return root_; }

    /// Pretty-prints with minimal parentheses; the output reparses to an
    /// equivalent tree.
    [[nodiscard]] std::string to_string() const;

    /// Names of all constants referenced by the tree, sorted.
    [[nodiscard]] std::vector<std::string> constant_names() const;

    /// Structural equality (same shape, same literal values).
    [[nodiscard]] bool same_tree(const Expression& other) const;

private:
    NodePtr root_;
};

/// Parses `text`. Identifiers other than u, v and the names in `known_constants`
/// are rejected at parse time.
///
/// Grammar (highest binding first): atoms and calls, ^ (right-assoc),
/// unary -/+, * and /, binary + and -.
Expression parse_expression(std::string_view text, const ConstantBindings& known_constants = {});

/// Same, but with an explicit list of admissible constant names.
Expression parse_expression(std::string_view text, const std::vector<std::string>& constant_names);

/// Exact second-order jet at (u, v).
Jet2 evaluate_jet(const Expression& expr, double u, double v, const ConstantBindings& consts);

/// Value at (u, v); always equal to evaluate_jet(...).val.
double evaluate_scalar(const Expression& expr, double u, double v, const ConstantBindings& consts);

// Programmatic construction.
Expression number(double value);
Expression variable(Variable var);
Expression constant(std::string name);
Expression negate(const Expression& e);
Expression binary(BinaryOp op, const Expression& lhs, const Expression& rhs);
Expression call(Function fn, std::vector<Expression> args);

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);

/// Replaces every occurrence of u and v by the given expressions.
Expression substitute(const Expression& expr, const Expression& u_repl, const Expression& v_repl);

}  // namespace surf4::expr

#include "surf4/expr/expression.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <type_traits>

#include "surf4/error.hpp"

namespace surf4::expr {

ConstantBindings::ConstantBindings(std::initializer_list<std::pair<const std::string, double>> init) {
    for (const auto& [name, value] : init) bind(name, value);
}

void ConstantBindings::bind(const std::string& name, double value) {
    if (name.empty() || name == "u" || name == "v" || function_from_name(name)) {
        throw InputError("invalid constant name '" + name + "'");
    }
    if (!values_.emplace(name, value).second) {
        throw InputError("constant '" + name + "' bound twice");
    }
}

bool ConstantBindings::contains(std::string_view name) const { return values_.find(name) != values_.end(); }

double ConstantBindings::at(std::string_view name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) throw InputError("unbound constant '" + std::string(name) + "'");
    return it->second;
}

namespace {

struct FunctionInfo {
    Function fn;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<FunctionInfo, 10> kFunctions{{
    {Function::Sin, "sin", 1},
    {Function::Cos, "cos", 1},
    {Function::Tan, "tan", 1},
    {Function::Exp, "exp", 1},
    {Function::Ln, "ln", 1},
    {Function::Sqrt, "sqrt", 1},
    {Function::Sinh, "sinh", 1},
    {Function::Cosh, "cosh", 1},
    {Function::Abs, "abs", 1},
    {Function::Pow, "pow", 2},
}};

const FunctionInfo& info(Function f) {
    return *std::find_if(kFunctions.begin(), kFunctions.end(),
                         [f](const FunctionInfo& i) { return i.fn == f; });
}

}  // namespace

std::string_view function_name(Function f) { return info(f).name; }
std::size_t function_arity(Function f) { return info(f).arity; }

std::optional<Function> function_from_name(std::string_view name) {
    for (const auto& i : kFunctions) {
        if (i.name == name) return i.fn;
    }
    return std::nullopt;
}

Expression::Expression(NodePtr root) : root_(std::move(root)) {
    if (!root_) throw InputError("empty expression tree");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength used to decide where parentheses are needed.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

std::string format_number(double x) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

int precedence(const Node& n) {
    return std::visit(
        [](const auto& d) -> int {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Node::Number>) {
                return d.value < 0 || std::signbit(d.value) ? kUnary : kAtom;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                return kUnary;
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                switch (d.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub: return kSum;
                    case BinaryOp::Mul:
                    case BinaryOp::Div: return kProduct;
                    case BinaryOp::Pow: return kPower;
                }
                return kAtom;
            } else {
                return kAtom;
            }
        },
        n.data);
}

void print(const Node& n, std::string& out);

void print_child(const Node& child, int required, std::string& out) {
    if (precedence(child) < required) {
        out += '(';
        print(child, out);
        out += ')';
    } else {
        print(child, out);
    }
}

void print(const Node& n, std::string& out) {
    std::visit(
        [&out](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Node::Number>) {
                out += format_number(d.value);
            } else if constexpr (std::is_same_v<T, Node::Var>) {
                out += d.var == Variable::U ? 'u' : 'v';
            } else if constexpr (std::is_same_v<T, Node::Constant>) {
                out += d.name;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                out += '-';
                print_child(*d.operand, kUnary, out);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                switch (d.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub:
                        print_child(*d.lhs, kSum, out);
                        out += d.op == BinaryOp::Add ? " + " : " - ";
                        print_child(*d.rhs, kProduct, out);
                        break;
                    case BinaryOp::Mul:
                    case BinaryOp::Div:
                        print_child(*d.lhs, kProduct, out);
                        out += d.op == BinaryOp::Mul ? "*" : "/";
                        print_child(*d.rhs, kUnary, out);
                        break;
                    case BinaryOp::Pow:
                        print_child(*d.lhs, kAtom, out);
                        out += '^';
                        print_child(*d.rhs, kAtom, out);
                        break;
                }
            } else {
                out += function_name(d.fn);
                out += '(';
                for (std::size_t i = 0; i < d.args.size(); ++i) {
                    if (i) out += ", ";
                    print(*d.args[i], out);
                }
                out += ')';
            }
        },
        n.data);
}

void collect_constants(const Node& n, std::set<std::string>& names) {
    std::visit(
        [&names](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Node::Constant>) {
                names.insert(d.name);
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                collect_constants(*d.operand, names);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                collect_constants(*d.lhs, names);
                collect_constants(*d.rhs, names);
            } else if constexpr (std::is_same_v<T, Node::Call>) {
                for (const auto& a : d.args) collect_constants(*a, names);
            }
        },
        n.data);
}

bool same(const Node& a, const Node& b) {
    if (a.data.index() != b.data.index()) return false;
    return std::visit(
        [&b](const auto& da) -> bool {
            using T = std::decay_t<decltype(da)>;
            const auto& db = std::get<T>(b.data);
            if constexpr (std::is_same_v<T, Node::Number>) {
                return da.value == db.value;
            } else if constexpr (std::is_same_v<T, Node::Var>) {
                return da.var == db.var;
            } else if constexpr (std::is_same_v<T, Node::Constant>) {
                return da.name == db.name;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                return same(*da.operand, *db.operand);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                return da.op == db.op && same(*da.lhs, *db.lhs) && same(*da.rhs, *db.rhs);
            } else {
                if (da.fn != db.fn || da.args.size() != db.args.size()) return false;
                for (std::size_t i = 0; i < da.args.size(); ++i) {
                    if (!same(*da.args[i], *db.args[i])) return false;
                }
                return true;
            }
        },
        a.data);
}

}  // namespace

std::string Expression::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

std::vector<std::string> Expression::constant_names() const {
    std::set<std::string> names;
    collect_constants(*root_, names);
    return {names.begin(), names.end()};
}

bool Expression::same_tree(const Expression& other) const { return same(*root_, *other.root_); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct JetEvaluator {
    double u, v;
    const ConstantBindings& consts;

    Jet2 operator()(const Node& n) const {
        return std::visit([this](const auto& d) { return eval(d); }, n.data);
    }

    Jet2 eval(const Node::Number& d) const { return Jet2::constant(d.value); }
    Jet2 eval(const Node::Var& d) const {
        return d.var == Variable::U ? Jet2::variable_u(u) : Jet2::variable_v(v);
    }
    Jet2 eval(const Node::Constant& d) const { return Jet2::constant(consts.at(d.name)); }
    Jet2 eval(const Node::Negate& d) const { return -(*this)(*d.operand); }

    Jet2 eval(const Node::Binary& d) const {
        const Jet2 a = (*this)(*d.lhs);
        const Jet2 b = (*this)(*d.rhs);
        switch (d.op) {
            case BinaryOp::Add: return a + b;
            case BinaryOp::Sub: return a - b;
            case BinaryOp::Mul: return a * b;
            case BinaryOp::Div: return a / b;
            case BinaryOp::Pow: return pow(a, b);
        }
        return a;
    }

    Jet2 eval(const Node::Call& d) const {
        const Jet2 a = (*this)(*d.args[0]);
        switch (d.fn) {
            case Function::Sin: return sin(a);
            case Function::Cos: return cos(a);
            case Function::Tan: return tan(a);
            case Function::Exp: return exp(a);
            case Function::Ln: return log(a);
            case Function::Sqrt: return sqrt(a);
            case Function::Sinh: return sinh(a);
            case Function::Cosh: return cosh(a);
            case Function::Abs: return abs(a);
            case Function::Pow: return pow(a, (*this)(*d.args[1]));
        }
        return a;
    }
};

}  // namespace

Jet2 evaluate_jet(const Expression& expr, double u, double v, const ConstantBindings& consts) {
    const Jet2 result = JetEvaluator{u, v, consts}(expr.root());
    if (!std::isfinite(result.val) || !std::isfinite(result.du) || !std::isfinite(result.dv) ||
        !std::isfinite(result.duu) || !std::isfinite(result.duv) || !std::isfinite(result.dvv)) {
        throw DomainError("non-finite result evaluating '" + expr.to_string() + "'");
    }
    return result;
}

double evaluate_scalar(const Expression& expr, double u, double v, const ConstantBindings& consts) {
    return evaluate_jet(expr, u, v, consts).val;
}

// ---------------------------------------------------------------------------
// Construction

Expression number(double value) {
    if (!std::isfinite(value)) throw InputError("non-finite literal");
    return Expression(std::make_shared<const Node>(Node{Node::Number{value}}));
}

Expression variable(Variable var) { return Expression(std::make_shared<const Node>(Node{Node::Var{var}})); }

Expression constant(std::string name) {
    return Expression(std::make_shared<const Node>(Node{Node::Constant{std::move(name)}}));
}

Expression negate(const Expression& e) {
    return Expression(std::make_shared<const Node>(Node{Node::Negate{e.root_ptr()}}));
}

Expression binary(BinaryOp op, const Expression& lhs, const Expression& rhs) {
    return Expression(std::make_shared<const Node>(Node{Node::Binary{op, lhs.root_ptr(), rhs.root_ptr()}}));
}

Expression call(Function fn, std::vector<Expression> args) {
    if (args.size() != function_arity(fn)) {
        throw InputError("wrong argument count for '" + std::string(function_name(fn)) + "'");
    }
    std::vector<NodePtr> nodes;
    nodes.reserve(args.size());
    for (auto& a : args) nodes.push_back(a.root_ptr());
    return Expression(std::make_shared<const Node>(Node{Node::Call{fn, std::move(nodes)}}));
}

Expression operator+(const Expression& a, const Expression& b) { return binary(BinaryOp::Add, a, b); }
Expression operator-(const Expression& a, const Expression& b) { return binary(BinaryOp::Sub, a, b); }
Expression operator*(const Expression& a, const Expression& b) { return binary(BinaryOp::Mul, a, b); }
Expression operator/(const Expression& a, const Expression& b) { return binary(BinaryOp::Div, a, b); }

namespace {

NodePtr substitute_node(const NodePtr& n, const NodePtr& u_repl, const NodePtr& v_repl) {
    return std::visit(
        [&](const auto& d) -> NodePtr {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Node::Var>) {
                return d.var == Variable::U ? u_repl : v_repl;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                return std::make_shared<const Node>(Node{Node::Negate{substitute_node(d.operand, u_repl, v_repl)}});
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                return std::make_shared<const Node>(Node{Node::Binary{
                    d.op, substitute_node(d.lhs, u_repl, v_repl), substitute_node(d.rhs, u_repl, v_repl)}});
            } else if constexpr (std::is_same_v<T, Node::Call>) {
                std::vector<NodePtr> args;
                for (const auto& a : d.args) args.push_back(substitute_node(a, u_repl, v_repl));
                return std::make_shared<const Node>(Node{Node::Call{d.fn, std::move(args)}});
            } else {
                return n;
            }
        },
        n->data);
}

}  // namespace

Expression substitute(const Expression& expr, const Expression& u_repl, const Expression& v_repl) {
    return Expression(substitute_node(expr.root_ptr(), u_repl.root_ptr(), v_repl.root_ptr()));
}

}  // namespace surf4::expr

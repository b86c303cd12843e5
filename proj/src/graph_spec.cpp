#include <homlab/graph_spec.hpp>

#include <cctype>
#include <charconv>
#include <cmath>

namespace homlab {

GraphSpec GraphSpec::gnp(double p, std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("gnp: p must lie in (0,1)");
    GraphSpec s(Kind::Gnp);
    s.p_ = p;
    s.seed_ = seed;
    return s;
}

GraphSpec GraphSpec::cliques(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("cliques: block size must be >= 1");
    GraphSpec s(Kind::Cliques);
    s.k_ = k;
    return s;
}

GraphSpec GraphSpec::complement_of(GraphSpec inner) {
    GraphSpec s(Kind::Complement);
    s.children_.push_back(std::move(inner));
    return s;
}

GraphSpec GraphSpec::union_of(GraphSpec left, GraphSpec right) {
    GraphSpec s(Kind::Union);
    s.children_.push_back(std::move(left));
    s.children_.push_back(std::move(right));
    return s;
}

bool GraphSpec::operator==(const GraphSpec& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Gnp: return p_ == other.p_ && seed_ == other.seed_;
        case Kind::Cliques: return k_ == other.k_;
        case Kind::Complement: return children_[0] == other.children_[0];
        case Kind::Union:
            return children_[0] == other.children_[0] && children_[1] == other.children_[1];
        default: return true;
    }
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    std::string_view ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected a generator name", pos);
        return text.substr(start, pos - start);
    }

    std::uint64_t uint_lit() {
        skip_ws();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError("expected an unsigned integer", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }

    double float_lit() {
        skip_ws();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError("expected a floating-point literal", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }

    void key(std::string_view name) {
        skip_ws();
        if (text.substr(pos, name.size()) != name)
            throw ParseError("expected '" + std::string(name) + "='", pos);
        pos += name.size();
        expect('=');
    }

    GraphSpec spec() {
        std::size_t at = pos;
        auto name = ident();
        if (name == "rado") return GraphSpec::rado();
        if (name == "empty") return GraphSpec::empty();
        if (name == "complete") return GraphSpec::complete();
        if (name == "gnp") {
            expect('(');
            key("p");
            double p = float_lit();
            if (!(p > 0.0 && p < 1.0))
                throw ParseError("gnp: p must lie in (0,1)", at);
            expect(',');
            key("seed");
            std::uint64_t seed = uint_lit();
            expect(')');
            return GraphSpec::gnp(p, seed);
        }
        if (name == "cliques") {
            expect('(');
            std::size_t kat = pos;
            std::uint64_t k = uint_lit();
            if (k == 0) throw ParseError("cliques: block size must be >= 1", kat);
            expect(')');
            return GraphSpec::cliques(k);
        }
        if (name == "complement") {
            expect('(');
            GraphSpec inner = spec();
            expect(')');
            return GraphSpec::complement_of(std::move(inner));
        }
        if (name == "union") {
            expect('(');
            GraphSpec left = spec();
            expect(',');
            GraphSpec right = spec();
            expect(')');
            return GraphSpec::union_of(std::move(left), std::move(right));
        }
        throw ParseError("unknown generator '" + std::string(name) + "'", at);
    }
};

std::string print_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
    Parser parser{text};
    GraphSpec result = parser.spec();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ParseError("trailing input after spec", parser.pos);
    return result;
}

std::string GraphSpec::print() const {
    switch (kind_) {
        case Kind::Rado: return "rado";
        case Kind::Empty: return "empty";
        case Kind::Complete: return "complete";
        case Kind::Gnp:
            return "gnp(p=" + print_double(p_) + ",seed=" + std::to_string(seed_) + ")";
        case Kind::Cliques: return "cliques(" + std::to_string(k_) + ")";
        case Kind::Complement: return "complement(" + children_[0].print() + ")";
        case Kind::Union:
            return "union(" + children_[0].print() + "," + children_[1].print() + ")";
    }
    throw std::logic_error("unreachable");
}

}  // namespace homlab

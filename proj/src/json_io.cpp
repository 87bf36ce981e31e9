#include "tridec/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace tridec {

namespace {

using nlohmann::json;

bool is_integral_number(const json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return true;
    if (v.is_number_float()) {
        double d = v.get<double>();
        return d == std::floor(d) && std::abs(d) < 9.0e15;
    }
    return false;
}

// First pass decides the document mode; strings select exact mode and must
// then only be mixed with integral numbers.
template <class F>
void scan_values(const json& j, F&& visit) {
    if (j.contains("entries")) {
        for (const auto& e : j.at("entries")) visit(e.at("val"));
    } else if (j.contains("cubic")) {
        for (const auto& [k, v] : j.at("cubic").items()) visit(v);
    }
}

std::vector<int> parse_exponents(const std::string& key) {
    std::vector<int> out;
    std::string tok;
    std::string norm = key;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream in2(norm);
    while (in2 >> tok) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw MalformedInput("bad exponent token in cubic key: " + key);
        }
    }
    if (out.empty()) throw MalformedInput("empty cubic key");
    return out;
}

Rat rat_value(const json& v) {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (is_integral_number(v)) return Rat(static_cast<long>(v.get<double>()));
    throw MalformedInput("exact document mixes rational strings with non-integer numbers");
}

double dbl_value(const json& v) {
    if (v.is_string()) return to_double(rat_from_string(v.get<std::string>()));
    if (v.is_number()) return v.get<double>();
    throw MalformedInput("tensor value must be a number or a p/q string");
}

}  // namespace

TensorDocument parse_tensor_document(const json& j) {
    if (!j.is_object()) throw MalformedInput("tensor document must be a JSON object");

    TensorDocument doc;
    scan_values(j, [&](const json& v) {
        if (v.is_string()) doc.exact = true;
        else if (!v.is_number())
            throw MalformedInput("tensor value must be a number or a p/q string");
    });

    if (j.contains("entries")) {
        if (!j.contains("n")) throw MalformedInput("entries document requires \"n\"");
        int n = j.at("n").get<int>();
        if (n < 2 || n > 8) throw MalformedInput("dimension must be in [2, 8]");
        doc.dbl = SymTensor3<double>(n);
        if (doc.exact) doc.rat = SymTensor3<Rat>(n);
        std::vector<bool> seen(512, false);
        for (const auto& e : j.at("entries")) {
            const auto& idx = e.at("idx");
            if (!idx.is_array() || idx.size() != 3) throw MalformedInput("idx must be [i,j,k]");
            int i = idx[0].get<int>(), jj = idx[1].get<int>(), k = idx[2].get<int>();
            if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
                throw MalformedInput("tensor index out of range");
            int a = i - 1, b = jj - 1, c = k - 1;
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            size_t key = size_t(a) * 64 + size_t(b) * 8 + size_t(c);
            if (seen[key]) throw MalformedInput("duplicate tensor index triple");
            seen[key] = true;
            doc.dbl.set(a, b, c, dbl_value(e.at("val")));
            if (doc.exact) doc.rat.set(a, b, c, rat_value(e.at("val")));
        }
    } else if (j.contains("cubic")) {
        const auto& cubic = j.at("cubic");
        if (!cubic.is_object() || cubic.empty())
            throw MalformedInput("cubic document must be a non-empty object");
        int n = -1;
        if (j.contains("n")) n = j.at("n").get<int>();
        CubicCoeffs<double> cd;
        CubicCoeffs<Rat> cr;
        for (const auto& [key, v] : cubic.items()) {
            std::vector<int> expo = parse_exponents(key);
            if (n < 0) n = int(expo.size());
            if (int(expo.size()) != n)
                throw MalformedInput("cubic keys disagree on the number of variables");
            cd[expo] = dbl_value(v);
            if (doc.exact) cr[expo] = rat_value(v);
        }
        if (n < 2 || n > 8) throw MalformedInput("dimension must be in [2, 8]");
        doc.dbl = tensor_from_cubic(cd, n);
        if (doc.exact) doc.rat = tensor_from_cubic(cr, n);
    } else {
        throw MalformedInput("tensor document needs \"entries\" or \"cubic\"");
    }
    return doc;
}

TensorDocument load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_tensor_document(j);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad tensor document: ") + e.what());
    }
}

namespace {

template <class K>
json tensor_json_impl(const SymTensor3<K>& t) {
    json entries = json::array();
    t.for_each([&](int i, int j, int k, const K& v) {
        if (v == K(0)) return;
        json e;
        e["idx"] = {i + 1, j + 1, k + 1};
        if constexpr (is_exact_field_v<K>)
            e["val"] = scalar_repr(v);
        else
            e["val"] = v;
        entries.push_back(std::move(e));
    });
    return json{{"n", t.dim()}, {"entries", std::move(entries)}};
}

}  // namespace

json tensor_json(const SymTensor3<Rat>& t) { return tensor_json_impl(t); }
json tensor_json(const SymTensor3<double>& t) { return tensor_json_impl(t); }

std::string digest_hex(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

}  // namespace tridec

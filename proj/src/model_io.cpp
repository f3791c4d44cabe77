#include "relprop/model_io.hpp"

#include <cstdio>
#include <sstream>

#include "relprop/errors.hpp"
#include "relprop/parser.hpp"

namespace relprop {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Line cursor with 1-based positions for error reporting.
class Lines {
public:
    explicit Lines(const std::string& text) {
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string::npos) end = text.size();
            lines_.push_back(text.substr(start, end - start));
            start = end + 1;
        }
    }

    const std::string& next(const char* what) {
        if (i_ >= lines_.size()) {
            throw ParseError(static_cast<int>(lines_.size()) + 1, 1,
                             std::string("expected ") + what + ", found end of file");
        }
        return lines_[i_++];
    }

    int line_no() const { return static_cast<int>(i_); }
    bool done() const { return i_ >= lines_.size(); }

private:
    std::vector<std::string> lines_;
    std::size_t i_ = 0;
};

/// "keyword <count>" header line.
long expect_count(Lines& in, const std::string& keyword) {
    std::istringstream ss(in.next(keyword.c_str()));
    std::string word;
    long count = -1;
    if (!(ss >> word >> count) || word != keyword || count < 0) {
        throw ParseError(in.line_no(), 1, "expected '" + keyword + " <count>'");
    }
    return count;
}

std::vector<double> expect_doubles(Lines& in, const std::string& keyword, long n) {
    std::istringstream ss(in.next(keyword.c_str()));
    std::string word;
    if (!(ss >> word) || word != keyword) {
        throw ParseError(in.line_no(), 1, "expected '" + keyword + " ...'");
    }
    std::vector<double> values;
    double v;
    while (ss >> v) values.push_back(v);
    if (static_cast<long>(values.size()) != n) {
        throw ParseError(in.line_no(), 1,
                         "expected " + std::to_string(n) + " values after '" + keyword +
                             "', found " + std::to_string(values.size()));
    }
    return values;
}

}  // namespace

std::string write_model(const ModelFile& model) {
    std::string text = "relprop-model 1\n";
    text += "classes " + std::to_string(model.class_names.size()) + "\n";
    for (const std::string& name : model.class_names) text += name + "\n";
    text += "bias " + std::to_string(model.bias.size()) + "\n";
    for (const BiasDecl& d : model.bias) text += to_string(d) + "\n";
    text += "features " + std::to_string(model.features.size()) + "\n";
    text += write_features(model.features);
    text += std::string("combination ") +
            (model.ensemble.combination == Combination::MeanPosterior ? "mean" : "vote") +
            "\n";
    text += "requested_size " + std::to_string(model.ensemble.requested_size) + "\n";
    text += "members " + std::to_string(model.ensemble.members.size()) + "\n";
    for (std::size_t k = 0; k < model.ensemble.members.size(); ++k) {
        const NBModel& member = model.ensemble.members[k];
        text += "member " + std::to_string(k + 1) + "\n";
        text += "subset " + std::to_string(member.subset.size());
        for (int f : member.subset) text += ' ' + std::to_string(f);
        text += "\n";
        text += "log_priors";
        for (double v : member.log_priors) text += ' ' + fmt17(v);
        text += "\n";
        for (const std::vector<double>& row : member.cond) {
            text += "cond";
            for (double v : row) text += ' ' + fmt17(v);
            text += "\n";
        }
    }
    return text;
}

ModelFile read_model(const std::string& text) {
    Lines in(text);
    {
        std::istringstream ss(in.next("'relprop-model 1'"));
        std::string word;
        int version = 0;
        if (!(ss >> word >> version) || word != "relprop-model" || version != 1) {
            throw ParseError(in.line_no(), 1, "not a relprop-model version 1 file");
        }
    }

    ModelFile model;
    long num_classes = expect_count(in, "classes");
    if (num_classes < 1) throw ParseError(in.line_no(), 1, "need at least one class");
    for (long j = 0; j < num_classes; ++j) {
        model.class_names.push_back(in.next("a class name"));
        if (model.class_names.back().empty()) {
            throw ParseError(in.line_no(), 1, "empty class name");
        }
    }

    long bias_count = expect_count(in, "bias");
    std::string bias_text;
    for (long b = 0; b < bias_count; ++b) {
        bias_text += in.next("a bias declaration");
        bias_text += '\n';
    }
    int bias_base = in.line_no();
    try {
        model.bias = parse_bias(bias_text);
    } catch (const ParseError& e) {
        throw ParseError(bias_base - static_cast<int>(bias_count) + e.line(), e.column(),
                         e.detail());
    }
    if (static_cast<long>(model.bias.size()) != bias_count) {
        throw ParseError(bias_base, 1, "bias count does not match declarations");
    }

    long feature_count = expect_count(in, "features");
    std::string features_text;
    for (long f = 0; f < feature_count; ++f) {
        features_text += in.next("a feature line");
        features_text += '\n';
    }
    int features_base = in.line_no();
    try {
        model.features = read_features(features_text);
    } catch (const ParseError& e) {
        throw ParseError(features_base - static_cast<int>(feature_count) + e.line(),
                         e.column(), e.detail());
    }

    {
        std::istringstream ss(in.next("'combination mean|vote'"));
        std::string word, rule;
        if (!(ss >> word >> rule) || word != "combination" ||
            (rule != "mean" && rule != "vote")) {
            throw ParseError(in.line_no(), 1, "expected 'combination mean' or 'combination vote'");
        }
        model.ensemble.combination =
            rule == "mean" ? Combination::MeanPosterior : Combination::MajorityVote;
    }
    long requested = expect_count(in, "requested_size");
    if (requested < 1) throw ParseError(in.line_no(), 1, "requested_size must be >= 1");
    model.ensemble.requested_size = static_cast<int>(requested);
    model.ensemble.num_classes = static_cast<int>(num_classes);

    long member_count = expect_count(in, "members");
    if (member_count < 1) throw ParseError(in.line_no(), 1, "need at least one member");
    for (long k = 0; k < member_count; ++k) {
        long ordinal = expect_count(in, "member");
        if (ordinal != k + 1) {
            throw ParseError(in.line_no(), 1, "member lines out of order");
        }
        NBModel member;
        member.num_classes = static_cast<int>(num_classes);
        {
            std::istringstream ss(in.next("'subset ...'"));
            std::string word;
            long size = -1;
            if (!(ss >> word >> size) || word != "subset" || size < 0) {
                throw ParseError(in.line_no(), 1, "expected 'subset <count> <indices>'");
            }
            long idx;
            while (ss >> idx) member.subset.push_back(static_cast<int>(idx));
            if (static_cast<long>(member.subset.size()) != size) {
                throw ParseError(in.line_no(), 1, "subset count does not match indices");
            }
            for (std::size_t i = 0; i < member.subset.size(); ++i) {
                if (member.subset[i] < 0 ||
                    member.subset[i] >= static_cast<int>(model.features.size()) ||
                    (i > 0 && member.subset[i] <= member.subset[i - 1])) {
                    throw ParseError(in.line_no(), 1,
                                     "subset indices must be sorted, unique, and refer "
                                     "to listed features");
                }
            }
        }
        member.log_priors = expect_doubles(in, "log_priors", num_classes);
        for (std::size_t i = 0; i < member.subset.size(); ++i) {
            member.cond.push_back(expect_doubles(in, "cond", num_classes));
        }
        try {
            rederive_tables(member);
        } catch (const DataError& e) {
            throw ParseError(in.line_no(), 1, e.what());
        }
        model.ensemble.members.push_back(std::move(member));
    }
    if (!in.done()) {
        throw ParseError(in.line_no() + 1, 1, "trailing content after last member");
    }
    return model;
}

}  // namespace relprop

#include "sgb/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sgb/errors.hpp"

namespace sgb {

using nlohmann::json;

namespace {

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vector_from_json(const json& arr) {
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    return v;
}

}  // namespace

std::string model_to_json(const BoostModel& model) {
    json doc;
    doc["format"] = "sgb-model";
    doc["version"] = 1;
    doc["family"] = model.family.name();
    doc["nu"] = model.nu;
    doc["mstop"] = model.mstop;
    doc["offset"] = model.offset;
    doc["n_rows"] = model.n_rows;
    doc["outcome"] = {{"name", model.outcome_name},
                      {"mean", model.outcome_standardization.mean},
                      {"sd", model.outcome_standardization.sd}};

    json columns = json::array();
    for (std::size_t j = 0; j < model.column_names.size(); ++j) {
        columns.push_back({{"name", model.column_names[j]},
                           {"source", model.column_source[j]},
                           {"mean", model.standardization[j].mean},
                           {"sd", model.standardization[j].sd}});
    }
    doc["columns"] = columns;

    json learners = json::array();
    for (const auto& bl : model.learners) {
        json cols = json::array();
        for (auto c : bl.columns()) cols.push_back(c);
        learners.push_back({{"id", bl.id},
                            {"kind", bl.kind_name()},
                            {"label", bl.label},
                            {"columns", cols},
                            {"target_df", bl.target_df},
                            {"lambda", bl.lambda}});
    }
    doc["learners"] = learners;
    doc["coefficients"] = vector_to_json(model.coefficients);

    json trace = json::array();
    for (const auto& rec : model.trace) {
        json r = {{"m", rec.iteration},
                  {"learner", rec.learner_id},
                  {"increment", vector_to_json(rec.increment)},
                  {"loss_before", rec.loss_before},
                  {"loss_after", rec.loss_after}};
        if (!rec.candidate_rss.empty()) r["candidate_rss"] = rec.candidate_rss;
        trace.push_back(std::move(r));
    }
    doc["trace"] = trace;
    return doc.dump(2);
}

BoostModel model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "sgb-model")
            throw ParseError("not a model document (missing format tag)");
        BoostModel model;
        model.family = Family::parse(doc.at("family").get<std::string>());
        model.nu = doc.at("nu").get<double>();
        model.mstop = doc.at("mstop").get<int>();
        model.offset = doc.at("offset").get<double>();
        model.n_rows = doc.at("n_rows").get<Eigen::Index>();
        model.outcome_name = doc.at("outcome").at("name").get<std::string>();
        model.outcome_standardization = {
            doc.at("outcome").at("mean").get<double>(),
            doc.at("outcome").at("sd").get<double>()};
        for (const auto& c : doc.at("columns")) {
            model.column_names.push_back(c.at("name").get<std::string>());
            model.column_source.push_back(c.at("source").get<std::string>());
            model.standardization.push_back(
                {c.at("mean").get<double>(), c.at("sd").get<double>()});
        }
        for (const auto& l : doc.at("learners")) {
            BaseLearner bl;
            bl.id = l.at("id").get<int>();
            bl.kind = l.at("kind").get<std::string>() == "group"
                          ? LearnerKind::Group
                          : LearnerKind::Individual;
            bl.label = l.at("label").get<std::string>();
            for (const auto& c : l.at("columns"))
                bl.columns_.push_back(c.get<Eigen::Index>());
            bl.target_df = l.at("target_df").get<double>();
            bl.lambda = l.at("lambda").get<double>();
            model.learners.push_back(std::move(bl));
        }
        model.coefficients = vector_from_json(doc.at("coefficients"));
        for (const auto& r : doc.at("trace")) {
            TraceRecord rec;
            rec.iteration = r.at("m").get<int>();
            rec.learner_id = r.at("learner").get<int>();
            rec.increment = vector_from_json(r.at("increment"));
            rec.loss_before = r.at("loss_before").get<double>();
            rec.loss_after = r.at("loss_after").get<double>();
            if (r.contains("candidate_rss"))
                rec.candidate_rss =
                    r.at("candidate_rss").get<std::vector<double>>();
            model.trace.push_back(std::move(rec));
        }
        return model;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
}

void save_model(const BoostModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write model file: " + path);
    out << model_to_json(model) << "\n";
}

BoostModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

}  // namespace sgb

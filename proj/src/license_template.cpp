#include <fstream>
#include <sstream>

#include "mdl/render.hpp"

namespace mdl {

namespace {

LicenseTemplate make_verbatim() {
  LicenseTemplate t;
  t.variant = "verbatim";
  t.preamble =
      "The following licensing language is made available under CC-BY4. Attribution should be "
      "made to “Montreal Data License (MDL)”, or “License language based on Montreal Data "
      "License”.";
  t.title = "Data License for use in AI and ML:";
  t.intro =
      "This license covers the Data made available by Licensor to you (“License”) under the "
      "following terms. Licensee’s use of the data consists acceptance of the terms of this "
      "license agreement (“License”).";

  t.definitions_heading = "Definitions";
  t.definitions = {
      {"Data", "means the informational content (individually or as a whole) made available by Licensor."},
      {"Model",
       "means machine-learning or artificial-intelligence based algorithms, or assemblies thereof "
       "that, in combination with different techniques, may be used to obtain certain results. "
       "Without limitation, such results can be insights on past data patterns, predictions on "
       "future trends or more abstract results."},
      {"Output",
       "means the results of operating a Trained Model as embodied in informational content "
       "resulting therefrom."},
      {"Representation",
       "is a transformation of a piece of data into a different form. Good representations can "
       "be used as input to perform useful tasks."},
      {"Labelled Data",
       "means the associated metadata and informational content derived from Data which "
       "identify, comment or otherwise derive information from Data, such as tags and labels."},
      {"Licensor", "means the individual or entity making the Data available to you."},
      {"Third Parties", "means individuals or entities that are not under common control with Licensee."},
      {"Train",
       "means to expose an Untrained Model to the Data in order to adjust the weights, "
       "hyperparameters and/or structure thereof."},
      {"Trained Model",
       "means a Model that is exposed to Data such that its weights, parameters and architecture "
       "embody insights from the Data."},
      {"Untrained Model",
       "means Model that is conceived and reduced to practice as to its structure, components and "
       "architecture but that has not been trained on Data such that its weights, parameters and "
       "architecture do not embody insights from the Data."},
  };

  t.general_heading = "General Clauses";
  t.general_clauses = {
      "Unless otherwise agreed in writing by the parties, the data is licensed “as is” and “as "
      "available”. Licensor excludes all representations, warranties, obligations, and "
      "liabilities, whether express or implied, to the maximum extent permitted by law.",
      "Nothing in this License permits Licensee to make use of Licensor’s trademarks, trade "
      "names, logos or to otherwise suggest endorsement or misrepresent the relationship between "
      "the parties.",
      "The rights granted under this license are deemed to be non-exclusive, worldwide, perpetual "
      "and irrevocable, unless otherwise specified in writing by Licensor.",
      "Without limiting Licensee’s rights available under applicable law, all rights not "
      "expressly granted hereunder are hereby reserved by Licensor. The Data and the database "
      "under which it is made available remain the property of Licensor (and/or its affiliates or "
      "licensors).",
      "This license shall be terminated upon any breach by Licensee of the terms of this License.",
  };

  t.data_heading = "Licensed Rights to the Data";
  t.data_grant_lead =
      "Licensor hereby grants the following rights to Licensee with respect to making use of the "
      "Data itself.";
  t.data_exclude_lead =
      "The rights granted in (a) above exclude the following rights with respect to making use "
      "of the Data itself:";
  t.data_items = {
      "Access the Data, where “access” means to access, view and/or download the Data to view it "
      "and evaluate it (evaluation algorithms may be exposed to it, but no Untrained Models).",
      "Creation of Tagged Data.",
      "Distribute the Data, i.e. to make all or part of the Data available to Third Parties under "
      "the same terms as those of this License.",
      "Creation of a Representation of the Data.",
  };

  t.model_heading = "Licensed Rights in Conjunction with Models.";
  t.model_grant_lead =
      "Licensor hereby grants the following rights to Licensee with respect to making use of the "
      "Data in conjunction with Models.";
  t.model_exclude_lead =
      "The rights granted in (a) above exclude the following rights with respect to making use "
      "of the Data in conjunction with Models:";
  t.model_items = {
      "Benchmark: To access the Data, use the Data as training data to evaluate the efficiency of "
      "different Untrained Models, algorithms and structures, but excludes reuse of the Trained "
      "Model, except to show the results of the Training. This includes the right to use the "
      "dataset to measure performance of a Trained or Untrained Model, without however having the "
      "right to carry-over weights, code or architecture or implement any modifications resulting "
      "from the Evaluation.",
      "Research: To access the Data, use the Data to create or improve Models, but without the "
      "right to use the Output or resulting Trained Model for any purpose other than evaluating "
      "the Model Research under the same terms.",
      "Publish: To make available to Third Parties the Models resulting from Research, provided "
      "however that third parties accessing such Trained Models have the right to use them for "
      "Research or Publication only.",
      "Internal Use: To access the Data, use the Data to create or improve Models and resulting "
      "Output, but without the right to Output Commercialization or Model Commercialization. The "
      "Output can be used internally for any purpose, but not made available to Third Parties or "
      "for their benefit.",
      "Output Commercialization: To access the Data, use the Data to create or improve Models and "
      "resulting Output, with the right to make the Output available to Third Parties or to use it "
      "for their benefit, without the right to Model Commercialization.",
      "Model Commercialization: Make a Trained Model itself available to a Third Party, or "
      "embodying the Trained Model in a product or service, with or without direct access to the "
      "Output for such Third Party.",
  };

  t.notice_heading = "Attribution and Notice";
  t.notice_origin =
      "The origin of the Data and notices included with the Data shall be made available to Third "
      "Parties to whom the Data, Output and/Model have been made available.";
  t.notice_same_terms =
      "Any distribution of all or part of the Data shall be done under the same terms as those of "
      "this License.";
  t.notice_attribution =
      "Licensee shall make commercially reasonable efforts to link to the source of the Data.";
  t.notice_confidential_conditional =
      "If so indicated by the Licensor in writing alongside the Data that the use shall be deemed "
      "confidential, then Licensee shall not publicly refer to Licensor and/or the source of the "
      "Data.";
  t.notice_confidential =
      "Licensee shall not publicly refer to Licensor and/or the source of the Data.";

  t.exclude_parties =
      "Any exercise of the rights granted in (a) by a person or entity other than the following "
      "designated parties: {parties}.";
  t.exclude_no_parties =
      "Any exercise of the rights granted in (a) by any person or entity, no party being "
      "designated.";
  t.exclude_domains =
      "Any use of the Data, Models or Output in connection with the following fields: {domains}.";
  t.exclude_sublicense =
      "Sub-licensing of the Data, including making the Data available to contractors or other "
      "Third Parties acting on behalf of Licensee.";
  return t;
}

void replace_once(std::string& s, std::string_view from, std::string_view to) {
  auto pos = s.find(from);
  if (pos == std::string::npos) throw std::logic_error("template text missing: " + std::string(from));
  s.replace(pos, from.size(), to);
}

LicenseTemplate make_corrected() {
  LicenseTemplate t = make_verbatim();
  t.variant = "corrected";
  replace_once(t.intro, "to you (“License”)", "to you (“Licensee”)");
  replace_once(t.intro, "consists acceptance", "constitutes acceptance");
  replace_once(t.definitions.back().text, "means Model that", "means a Model that");
  replace_once(t.notice_origin, "Output and/Model", "Output and/or Model");
  t.changelog = {
      "Introduction: the party defined as “you” is “Licensee” (was “License”).",
      "Introduction: “consists acceptance” reads “constitutes acceptance”.",
      "Definitions, Untrained Model: “means Model” reads “means a Model”.",
      "Attribution and Notice: “Output and/Model” reads “Output and/or Model”.",
  };
  return t;
}

}  // namespace

const LicenseTemplate& LicenseTemplate::verbatim() {
  static const LicenseTemplate t = make_verbatim();
  return t;
}

const LicenseTemplate& LicenseTemplate::corrected() {
  static const LicenseTemplate t = make_corrected();
  return t;
}

nlohmann::ordered_json LicenseTemplate::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant;
  j["changelog"] = changelog;
  j["preamble"] = preamble;
  j["title"] = title;
  j["intro"] = intro;
  j["definitions_heading"] = definitions_heading;
  auto defs = nlohmann::ordered_json::array();
  for (const auto& d : definitions) defs.push_back({{"term", d.term}, {"text", d.text}});
  j["definitions"] = defs;
  j["general_heading"] = general_heading;
  j["general_clauses"] = general_clauses;
  j["data_heading"] = data_heading;
  j["data_grant_lead"] = data_grant_lead;
  j["data_exclude_lead"] = data_exclude_lead;
  j["data_items"] = data_items;
  j["model_heading"] = model_heading;
  j["model_grant_lead"] = model_grant_lead;
  j["model_exclude_lead"] = model_exclude_lead;
  j["model_items"] = model_items;
  j["notice_heading"] = notice_heading;
  j["notice_origin"] = notice_origin;
  j["notice_same_terms"] = notice_same_terms;
  j["notice_attribution"] = notice_attribution;
  j["notice_confidential_conditional"] = notice_confidential_conditional;
  j["notice_confidential"] = notice_confidential;
  j["exclude_parties"] = exclude_parties;
  j["exclude_no_parties"] = exclude_no_parties;
  j["exclude_domains"] = exclude_domains;
  j["exclude_sublicense"] = exclude_sublicense;
  return j;
}

LicenseTemplate LicenseTemplate::from_json(const nlohmann::json& j) {
  LicenseTemplate t;
  j.at("variant").get_to(t.variant);
  t.changelog = j.value("changelog", std::vector<std::string>{});
  j.at("preamble").get_to(t.preamble);
  j.at("title").get_to(t.title);
  j.at("intro").get_to(t.intro);
  j.at("definitions_heading").get_to(t.definitions_heading);
  for (const auto& d : j.at("definitions"))
    t.definitions.push_back({d.at("term").get<std::string>(), d.at("text").get<std::string>()});
  j.at("general_heading").get_to(t.general_heading);
  j.at("general_clauses").get_to(t.general_clauses);
  j.at("data_heading").get_to(t.data_heading);
  j.at("data_grant_lead").get_to(t.data_grant_lead);
  j.at("data_exclude_lead").get_to(t.data_exclude_lead);
  j.at("data_items").get_to(t.data_items);
  j.at("model_heading").get_to(t.model_heading);
  j.at("model_grant_lead").get_to(t.model_grant_lead);
  j.at("model_exclude_lead").get_to(t.model_exclude_lead);
  j.at("model_items").get_to(t.model_items);
  j.at("notice_heading").get_to(t.notice_heading);
  j.at("notice_origin").get_to(t.notice_origin);
  j.at("notice_same_terms").get_to(t.notice_same_terms);
  j.at("notice_attribution").get_to(t.notice_attribution);
  j.at("notice_confidential_conditional").get_to(t.notice_confidential_conditional);
  j.at("notice_confidential").get_to(t.notice_confidential);
  j.at("exclude_parties").get_to(t.exclude_parties);
  j.at("exclude_no_parties").get_to(t.exclude_no_parties);
  j.at("exclude_domains").get_to(t.exclude_domains);
  j.at("exclude_sublicense").get_to(t.exclude_sublicense);
  return t;
}

LicenseTemplate LicenseTemplate::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open license template " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(nlohmann::json::parse(buf.str()));
}

}  // namespace mdl

#include "teacheval/schema.hpp"

namespace teacheval {

namespace {

struct Row {
  const char* printed;  // number as printed on the instrument
  const char* label;
  const char* gloss;    // nullptr when the instrument gives none
};

struct GroupRows {
  const char* name;
  std::initializer_list<Row> rows;
};

// Appendix listing of the final instrument. Items are renumbered
// contiguously per group; `printed` keeps the original numbering, which
// skips 2.13 and repeats 15.4.
const std::initializer_list<GroupRows> kInstrument = {
    {"Personal Abilities",
     {
         {"1.1", "Intellectual Ability", "The power of reasoning, thinking, and understanding"},
         {"1.2", "Analytical Skills", "The power of analysis"},
         {"1.3", "Creativity", "capable to create/ The quality of doing in a new way or new ideas"},
         {"1.4", "Maturity", "The quality of thinking and behaving in an appropriate manner"},
         {"1.5", "Integrity", "Syn: Unity: The quality of being and strong moral principals"},
         {"1.6", "Self Confidence", "The internal feeling of certainty in oneself"},
         {"1.7", "Problem Solving Skills", "The ability to solve problems"},
         {"1.8", "Cooperative", "The ability to work jointly"},
         {"1.9", "Intelligence", "The ability of learning, understanding in a logical way"},
         {"1.10", "Reliability and Dependability",
          "The qualities that can be trusted to do some thing well"},
         {"1.11", "Health & Personality",
          "The various aspects that differentiate human from one another"},
         {"1.12", "Initiative and Drive",
          "a self starter ability to action before being told what to do"},
         {"1.13", "Sense of Responsibility", "Careful about assigned duties to deal with"},
         {"1.14", "Flexibility & Adaptability",
          "ability to change or be changed easily according to the situation"},
         {"1.15", "Stress Tolerance",
          "Handles pressure effectively without getting upset, moody"},
     }},
    {"Teaching Learning Process",
     {
         {"2.1", "Proficiency in teaching", "Training and practices in teaching"},
         {"2.2", "Personal Interest in Teaching",
          "The impact of ones interest in teaching profession"},
         {"2.3", "Presentation & Communications skills",
          "The abilities of expression & interactions"},
         {"2.4", "Speaking Style & Body language",
          "The impact of Communication through Gesture & poses"},
         {"2.5", "Content knowledge", "The standard of knowledge delivered to students"},
         {"2.6", "Lecture preparation", "The importance of lecturer preparation"},
         {"2.7", "Language command",
          "The affects of the language that is used for teaching in class"},
         {"2.8", "Response to Student queries",
          "The answer to student's questions during class"},
         {"2.9", "Question Tackling", "The way questions or problem is tackled"},
         {"2.10", "Courses taught", "B.Sc, Msc, Mphil, Phd, Post Doc"},
         {"2.11", "Students Performance",
          "The percentage or standard of students results"},
         {"2.12", "Work load", "The impact of work load per day on teaching"},
         {"2.14", "Fairness in marking", "The accuracy of giving marks to students"},
     }},
    {"Responsibility & Punctuality",
     {
         {"3.1", "Punctuality",
          "Keeping the appointed time/ arrival to class & leave in time"},
         {"3.2", "Checking Assignments in time", "The importance of in time checking"},
         {"3.3", "Solving problems that pending in previous class",
          "Clarified pending class work"},
         {"3.4", "Motivate the students in extra activities",
          "Guide students to participates in other activities aside from curriculum"},
         {"3.5", "Willingness to work & seriousness to duty",
          "Self willing to do work & way to attempt"},
         {"3.6", "Work Dedication",
          "The ability to work hard & considered it is important"},
     }},
    {"Administrative Skills",
     {
         {"4.1", "Leadership",
          "The ability to provides direction and motivates others to work for a common goal"},
         {"4.2", "Behavior when under pressure", "The quality of work in a pressure situation"},
         {"4.3", "Judgments",
          "The ability of Making connections between seemingly unrelated pieces of "
          "information, and understands ramifications of outcomes"},
         {"4.4", "Decision Making skills", "The ability to take decision"},
         {"4.5", "Strategic Vision & Policy making skills",
          "To Sets expectations and institution direction to meet goals and making strategies"},
         {"4.6", "Care of Rules & Regulation",
          "The impact of following prescribed rules of working in organization"},
         {"4.7", "Controlling crises situation & uncertainty",
          "The impact of uncertain or unpredicted situation"},
         {"4.8", "Listening suggestions of others",
          "The willingness to gain idea by listening thinking of others"},
         {"4.9", "Taking Advantage from experience of others",
          "The utilization of some one experience efficiently for own work"},
         {"4.10", "Ability to convince & motivate others",
          "The Ability to reason and tracks of motivating others"},
     }},
    {"Supervision",
     {
         {"5.1", "Controlling students in class",
          "The methods of handling and controlling students in class room"},
         {"5.2", "Students supervision", "B.Sc, Msc, Mphil, Phd, Post Doc"},
         {"5.3", "Supervision activities other than teaching",
          "The quality of dealing others activities besides teaching"},
         {"5.4", "Interpersonal Relationships", "The impact of social links with others"},
     }},
    {"Professional Ethics",
     {
         {"6.1", "Temperament and manners",
          "The impact of nature and character of a teacher on performance"},
         {"6.2", "Interaction with students",
          "The impact of communication & dealing with students"},
         {"6.3", "Interaction with Colleagues",
          "The impact of communication & dealing with colleagues or co workers"},
         {"6.4", "Interaction with Officers",
          "The impact of communication & dealing with officer or high authority personnel"},
         {"6.5", "Interaction with lower staff",
          "The impact of communication & dealing with lower staff"},
         {"6.6", "Interaction with visitors/guests", "The dealing with visitors or guest"},
     }},
    {"Research Orientation",
     {
         {"7.1", "Academic Class standing", "The impact of ones strength in academics"},
         {"7.2", "Research potential", "The affects of capability to conduct research"},
         {"7.3", "Standard of Projects",
          "The successfulness or level of ones special works"},
         {"7.4", "Participations & organization of workshop, seminars, and conferences",
          "interest in events"},
         {"7.5", "Research Production",
          "The affects of the outcome of the research on teaching performance"},
         {"7.6", "Membership in research societies",
          "The participation or involvement in research conducting bodies"},
     }},
    {"Publication",
     {
         {"8.1", "Standard of Publications", "The quality of published material"},
         {"8.2", "National/Foreign Journal Paper Publications",
          "The interest or focus on journal papers"},
         {"8.3", "Joint Research Publications",
          "The collaboration research work other national of foreign partners"},
         {"8.4", "Books/ Monographs Published", "College level, university level"},
     }},
    {"Awards & Achievements",
     {
         {"9.1", "Recognition", "The impact self recognition in the institution"},
         {"9.2", "National/international awards",
          "The effects of achieving national or international awards or prizes"},
         {"9.3", "Scholarships",
          "The effects of achieving scholarships from national or foreign country"},
         {"9.4", "Research Grant received from Government/Private donors",
          "The research grant in hands"},
     }},
    {"Compensation & Rewards",
     {
         {"10.1", "Personal growth & Advancement", nullptr},
         {"10.2", "Presence of attractive compensation system", nullptr},
         {"10.3", "Presence of equitable internal salary", nullptr},
         {"10.4", "Presence of salary that reflects performance", nullptr},
         {"10.5", "Presence of salary that encourages better performance", nullptr},
         {"10.6", "Presence of salary that reflects standard of living", nullptr},
     }},
    {"Promotion Factors",
     {
         {"11.1", "Presence of written and operational promotion policy", nullptr},
         {"11.2", "Provision of priority to seniority in promotion decision", nullptr},
         {"11.3", "Provision of priority to merit in promotion", nullptr},
     }},
    {"Job Security & Environment Factors",
     {
         {"12.1", "work environment", "Overall working environments in the work place"},
         {"12.2", "Highly secure job policy",
          "The impact of secure job future, sure by organization or government"},
         {"12.3", "cooperation from superiors",
          "The support and behavior from high authority"},
         {"12.4", "Teamwork with colleagues",
          "The Ability to works in groups and is a good team player"},
         {"12.5", "Security & Status",
          "Overall security impact and social position in institute"},
     }},
    {"Organization Evaluation Policy",
     {
         {"13.1", "Presence of written and operational performance evaluation", nullptr},
         {"13.2", "Performance evaluation has a lot to do with salary", nullptr},
         {"13.3", "Performance evaluation has a lot to do with one's personal decisions",
          nullptr},
         {"13.4", "Provision of feed back of performance evaluation results", nullptr},
         {"13.5", "Performance evaluation is considered important task by superiors",
          nullptr},
         {"13.6", "Performance evaluation is knowledgeable", nullptr},
     }},
    {"Needs & Requirements",
     {
         {"14.1", "Psychological needs",
          "The needs of breathing, Food, water, sleep, sex, homeostasis of human"},
         {"14.2", "Safety needs",
          "The needs of security of body, employment, resources, morality, family, health "
          "and of property"},
         {"14.3", "Belong-ness needs", "The needs of family, friends, life partner"},
         {"14.4", "Esteem needs",
          "The needs of self esteem, confidence, respects to others, respect by others"},
         {"14.5", "Self-actualization needs",
          "The needs of morality, spontaneity, and acceptance of facts"},
     }},
    {"Background Factors",
     {
         {"15.1", "Age", nullptr},
         {"15.2", "Gender", nullptr},
         {"15.3", "Qualification", nullptr},
         {"15.4", "work Experience", nullptr},
         {"15.4", "Religious Belief", "The liking or affection of Religion"},
         {"15.5", "Political Affiliation", nullptr},
     }},
};

QuestionnaireSchema build() {
  QuestionnaireSchema s;
  s.version = 1;
  s.scale = canonical_scale();
  int gid = 0;
  for (const auto& group : kInstrument) {
    FactorGroup g;
    g.group_id = ++gid;
    g.name = group.name;
    int ordinal = 0;
    for (const auto& row : group.rows) {
      Item it;
      it.item_id = std::to_string(gid) + "." + std::to_string(++ordinal);
      it.label = row.label;
      if (row.gloss) it.gloss = row.gloss;
      it.paper_alias = row.printed;
      g.items.push_back(std::move(it));
    }
    s.groups.push_back(std::move(g));
  }
  return s;
}

}  // namespace

FuzzyScale canonical_scale() {
  FuzzyScale scale;
  scale.levels = {
      {1, "do not affect teachers' performance"},
      {2, "minimally affects"},
      {3, "helpful"},
      {4, "important"},
      {5, "critically important"},
  };
  scale.description =
      "5 Critical to Teacher's Performance; 4 Important to Teacher's Performance; "
      "3 Helpful to Teacher's performance; 2 Minimally affects teacher's performance; "
      "1 Do not affect teacher's performance";
  return scale;
}

const QuestionnaireSchema& canonical_schema() {
  static const QuestionnaireSchema schema = build();
  return schema;
}

}  // namespace teacheval

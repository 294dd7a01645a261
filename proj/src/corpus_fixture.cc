#include "ada/corpus.h"

namespace ada {

std::string_view bundled_corpus() {
  static constexpr std::string_view kCorpus =
    "<message id=\"10120\"><text>Bugis oso near wat...</text>\n"
    "<message id=\"10121\"><text>Go until jurong point, crazy.. Available only in bugis n great world la e buffet... Cine there got amore wat...</text>\n"
    "<message id=\"10122\"><text>I dunno until when... Lets go learn pilates...</text>\n"
    "<message id=\"10123\"><text>Den only weekdays got special price... Haiz... Cant eat liao... Cut nails oso muz wait until i finish drivin wat, lunch still muz eat wat...</text>\n"
    "<message id=\"10124\"><text>Meet after lunch la...</text>\n"
    "<message id=\"10125\"><text>m walking in citylink now u faster come down... Me very hungry...</text>\n"
    "<message id=\"10126\"><text>5 nights...We nt staying at port step liao...Too ex</text>\n"
    "<message id=\"10127\"><text>Hey pple...D700 or D900 for 5 nights...Excellent location wif breakfast hamper!!!</text>\n"
    "<message id=\"10128\"><text>Yun ah.the ubi one say if u wan call by tomorrow.call 67441233 look for irene.ere only got bus8,22,65,61,66,382. Ubi cres,ubi tech park.6ph for 1st 5wkg days.en</text>\n"
    "<message id=\"10129\"><text>Hey tmr maybe can meet you at yck</text>\n"
    "<message id=\"10130\"><text>Oh...i asked for fun. Haha...take care. u</text>\n"
    "<message id=\"10131\"><text>We are supposed to meet to discuss abt our trip... Thought xuhui told you? In the afternoon. Thought we can go for lesson after that</text>\n"
    "<message id=\"10132\"><text>t finish my film yet...</text>\n"
    "<message id=\"10133\"><text>m having dinner with my cousin...</text>\n"
    "<message id=\"10134\"><text>Oh... Kay... On sat right?</text>\n"
    "<message id=\"10135\"><text>I need... Coz i never go before</text>\n"
    "<message id=\"10136\"><text>s a basic yoga course... at bugis... We can go for that... Pilates intro next sat.... Tell me what time you r free</text>\n"
    "<message id=\"10137\"><text>I am going to sao mu today. Will be done only at 12</text>\n"
    "<message id=\"10138\"><text>Hey gals...U all wanna meet 4 dinner at nite?</text>\n"
    "<message id=\"10139\"><text>Jos ask if u wana meet up?</text>\n"
    "<message id=\"10140\"><text>Haiyoh... Maybe your hamster was jealous of million</text>\n"
    "<message id=\"10141\"><text>is your hamster dead? Hey so tmr i meet you at 1pm orchard mrt?</text>\n"
    "<message id=\"10142\"><text>ve booked the pilates and yoga lesson already... Haha</text>\n"
    "<message id=\"10143\"><text>Yup... I havent been there before... You want to go for the yoga? I can call up to book</text>\n"
    "<message id=\"10144\"><text>K... Must book a not huh? so going for yoga basic on sunday?</text>\n";
  return kCorpus;
}

}  // namespace ada

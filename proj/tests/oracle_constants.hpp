#pragma once
// Generated by tests/oracle/make_constants.py (mpmath). Do not edit.

namespace oracle {

struct Cplx {
  const char* re;
  const char* im;
};

inline const char* kZetaHalf = "-1.460354508809586812889499152515298012467";
inline const char* kZeta3 = "1.202056903159594285399738161511449990765";
inline const char* kZetaPrime3 = "-0.1981262428856368533306818215032857968755";
inline const Cplx kZetaAt03p20i{"0.2689944157539869102019956664669695179605", "-1.288423418048303805361053251286798292758"};
inline const Cplx kZetaAtM1p20i{"-2.376198742721786826273229314744987631927", "-4.978100171537759210255470232878622687045"};
inline const Cplx kZetaAt2p100i{"1.190780408775217015875667762381138783234", "-0.05389095935426045832395429375877888101210"};
inline const Cplx kZetaAtM35p5i{"-0.2716666003115485494055706815996773063561", "0.4824879338509755155951168674091575584405"};
inline const Cplx kLogGammaM25p01i{"-0.1031492440428192028875999739667905974329", "-9.314444268359838115005918568187188875962"};
inline const Cplx kLogGamma3p40i{"-52.68915506082263663063916540618537025944", "111.4051324154599654978613304941862226540"};
inline const Cplx kDigamma025p7i{"1.945697373699850303887056640772947537498", "1.606556461625957858747752448222852935146"};

inline const char* kZeroOrdinates[] = {
    "14.13472514173469379045725198356247027078",
    "21.02203963877155499262847959389690277733",
    "25.01085758014568876321379099256282181866",
    "30.42487612585951321031189753058409132018",
    "32.93506158773918969066236896407490348881",
    "37.58617815882567125721776348070533282141",
    "40.91871901214749518739812691463325439573",
    "43.32707328091499951949612216540680578265",
    "48.00515088116715972794247274942751604169",
    "49.77383247767230218191678467856372405772",
    "52.97032147771446064414729660888099006383",
    "56.44624769706339480436775947670612755278",
    "59.34704400260235307965364867499221903110",
    "60.83177852460980984425990182452400380291",
    "65.11254404808160666087505425318370502935",
    "67.07981052949417371447882889652221677011",
    "69.54640171117397925292685752655473844301",
    "72.06715767448190758252210796982616839048",
    "75.70469069908393316832691676203034592281",
    "77.14484006887480537268266485630463701580",
    "79.33737502024936792276359287711622819061",
    "82.91038085408603018316483749477060949751",
    "84.73549298051705010573531120682774141711",
    "87.42527461312522940653166785091921325217",
    "88.80911120763446542368234807950937839544",
    "92.49189927055848429625972524181068487872",
    "94.65134404051988696659792581520815393773",
    "95.87063422824530975874102921924678169526",
    "98.83119421819369223332442013862232782066",
    "101.3178510057313912287854479402923089063",
    "103.7255380404783394163984081086952808345",
    "105.4466230523260944936708324141118089973",
    "107.1686111842764075151233519630861912135",
    "111.0295355431696745246564503099443504153",
    "111.8746591769926370856120787167705949603",
    "114.3202209154527127658909372761910798099",
    "116.2266803208575543821608043120647551273",
    "118.7907828659762173229791397026998243473",
    "121.3701250024206459189455329704999227230",
    "122.9468292935525882008174603307700164962",
    "124.2568185543457671847320079661299244416",
    "127.5166838795964951242793237669060762681",
    "129.5787041999560509857680339061799736086",
    "131.0876885309326567235663724615013490592",
    "133.4977372029975864501304920426406076650",
    "134.7565097533738713313260641571697361784",
    "138.1160420545334432001915551902824478598",
    "139.7362089521213889504500465233824608468",
    "141.1237074040211237619403538184753550903",
    "143.1118458076206327394051238689139299662",
    "146.0009824867655185474025075964246824290",
    "147.4227653425596020495211850104315061688",
    "150.0535204207848803514324672369593706230",
    "150.9252576122414667618525246783056276024",
    "153.0246938111988961982565442551854465086",
    "156.1129092942378675697501893101691947465",
    "157.5975918175940598875305031584987657307",
    "158.8499881714204987241749947755402714143",
    "161.1889641375960275194373441293695543649",
    "163.0307096871819872433110390006879948970",
    "165.5370691879004188300389193548747973284",
    "167.1844399781745134409577562462103787365",
    "169.0945154155688214895058711814318347967",
    "169.9119764794116989666998435958217922884",
    "173.4115365195915529598461186493455952542",
    "174.7541915233657258133787624558669179388",
    "176.4414342977104188888926410578609335281",
    "178.3774077760999772858309354141844261831",
    "179.9164840202569961393400366120512374537",
    "182.2070784843664619154070372269877986908",
    "184.8744678483875088009606466172342584134",
    "185.5987836777074714665277042683926466129",
    "187.2289225835018519916415405861312430168",
    "189.4161586560169370848522890998453244914",
    "192.0266563607137865472836314255834301058",
    "193.0797266038457040474022057943760546040",
    "195.2653966795292353214631878148622509269",
    "196.8764818409583169486222639146962077357",
    "198.0153096762519124249199187022088671551",
    "201.2647519437037887330161334275481732224",
    "202.4935945141405342776866606378643158210",
    "204.1896718031045543307164383863136851365",
    "205.3946972021632860252123793906930909237",
    "207.9062588878062098615019679077536442687",
    "209.5765097168562598528356442898867521754",
    "211.6908625953653075639074867307192942534",
    "213.3479193597126661906391220210726088219",
    "214.5470447834914232229442010725906910456",
    "216.1695385082637002658695633544981285755",
    "219.0675963490213789856772565904372412451",
    "220.7149188393140033691155926339063396568",
    "221.4307055546933387320974751192760779502",
    "224.0070002546043352117288755285048953561",
    "224.9833246695822875037825236805286567721",
    "227.4214442796792913104614361606596399640",
    "229.3374133055253481077600833060557400828",
    "231.2501887004991647738061867700103726067",
    "231.9872352531802486037716685391978622054",
    "233.6934041789083006407044947325697881795",
    "236.5242296658162058024755079556629786895",
};
inline const Cplx kZetaPrimeRho1{"0.7832965118670309286496572092390650747961", "0.1246998297481710894099284915089053728433"};
inline const Cplx kZetaSecondRho1{"-0.6144097945772291863703091699065847732703", "-0.2297836431124342750746868992543300081399"};

inline const char* kStieltjes[] = {
    "0.5772156649015328606065120900824024310422",
    "-0.07281584548367672486058637587490131913774",
    "-0.009690363192872318484530386035212529359066",
    "0.002053834420303345866160046542753384285716",
    "0.002325370065467300057468170177526068000904",
    "0.0007933238173010627017533348774444448307315",
    "-0.0002387693454301996098724218419080042777837",
    "-0.0005272895670577510460740975054788582819963",
    "-0.0003521233538030395096020521650012087417292",
    "-3.439477441808804817791462379822739062079e-5",
    "0.0002053328149090647946837222892370653029599",
    "0.0002701844395439035266729020820679556738278",
    "0.0001672729121051401933535015433411834466078",
    "-2.746380660376015886000760369335518152679e-5",
    "-0.0002092092620592999458371396973445849578315",
    "-0.0002834686553202414466429344749971269770687",
    "-0.0001996968583089697747077845632032403919158",
    "2.627703710991833669946659763051012281608e-5",
    "0.0003073684081492528265927547519486256455238",
    "0.0005036054530473556290555964377171600353213",
    "0.0004663435615115594494005948244335505251131",
};

inline constexpr long kZeroCount15 = 1;
inline constexpr long kZeroCount30 = 3;
inline constexpr long kZeroCount50 = 10;
inline constexpr long kZeroCount100 = 29;
inline constexpr long kZeroCount236 = 99;
inline constexpr long kZeroCount500 = 269;

}  // namespace oracle

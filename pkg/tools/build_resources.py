#!/usr/bin/env python3
"""Build the seed resource files shipped under src/tokentasks/resources/.

Everything here is deterministic: hand-authored seed data plus seeded
derivations (topic combinations, riddle files, the Korean syllable corpus).
Run from the repository root:

    python tools/build_resources.py

The outputs are committed; this script exists for provenance and regeneration.
"""

from __future__ import annotations

import json
import random
import sys
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
RES = ROOT / "src" / "tokentasks" / "resources"
sys.path.insert(0, str(ROOT / "src"))

from tokentasks import hangul  # noqa: E402

# ---------------------------------------------------------------------------
# English corpus: hand-authored common words (inflected forms included
# directly; no rule-based morphology). Alphabetic plus internal hyphens.
# ---------------------------------------------------------------------------

EN_WORDS = """
the of and a to in is was he for it with as his on at by this had not are but
from or have an they which one you were her all she when who will more no if
out so said what up its about into than them can only other new some could
time these two may then do first any my now such like our over man me even
most made after also did many before must through back years where much your
way well down should because each just those people how too little state good
very make world still own see men work long get here between both life being
under never same another know while last might us great old year off come
since against go came right used take three states himself few house use
during without again place around however home small found mrs thought went
say part once general high upon school every don does got united left number
course war until always away something fact though water less public put
think almost hand enough far took head yet government system better set told
nothing night end why called didn eyes find going look asked later knew point
next city business give group toward young days let room within face child
side given order early john big four among best several national problem its
really heart felt become today dark church mother seemed member mind country
service door need president others power play better thing case lot keep
family begin seem open since saw kind whole across development word question
though turned white money paper moment hours study book job issue story month
research girl guy force education teacher foot boy age policy process music
market sense nation plan college interest death experience effect class
control care field role student morning reason art history party result
change level office health person information area game line car name team
minute idea body parent law community president door air member president
run move live believe hold bring happen write provide sit stand lose pay
meet include continue learn lead understand watch follow stop create speak
read allow add spend grow walk win offer remember love consider appear buy
wait serve die send expect build stay fall cut reach kill remain starts
started starting stopped stopping called calling asked asking wanted wanting
looked looking worked working played playing walked walking talked talking
moved moving lived living loved loving opened opening closed closing helped
helping turned turning learned learning showed showing listened listening
followed following watched watching waited waiting stayed staying visited
visiting carried carrying studied studying tried trying answered answering
although sun cat dog cup pen box bed bag map key net jar fox owl ant bee cow
pig hen egg ice oak elm fig nut sea sky mud fog dew rat bat ox ash arm leg
ear rib jaw hip toe gum fin paw fur web dot pit rod tin zinc iron gold silver
salt sand clay rock hill lake pond wave tide rain snow wind storm cloud
frost sunny rainy windy cloudy stormy misty foggy humid north south east
west spring summer autumn winter season harvest garden forest meadow valley
river ocean island desert canyon glacier volcano mountain plain coast shore
beach cliff cave spring creek stream apple orange banana grape lemon peach
cherry berry melon mango plum pear onion carrot potato tomato pepper bean
corn wheat rice oat barley bread butter cheese cream sugar honey flour juice
coffee dinner supper lunch breakfast kitchen table chair plate spoon fork
knife bowl glass bottle basket candle window curtain carpet ladder hammer
needle thread button pocket jacket shirt skirt dress glove scarf boot shoe
sock belt ring watch clock mirror brush comb soap towel pillow blanket
mattress drawer closet shelf attic cellar porch fence gate yard barn field
farm crop seed root stem leaf branch trunk bark flower petal pollen thorn
vine moss fern pine cedar maple willow birch walnut acorn squirrel rabbit
beaver badger weasel otter moose deer elk bison horse sheep goat mule camel
llama tiger lion leopard panther jaguar cheetah hyena jackal wolf bear seal
whale dolphin shark salmon trout herring sardine tuna crab lobster shrimp
oyster clam snail spider beetle cricket locust mantis moth butterfly dragonfly
firefly ladybug hornet wasp falcon eagle hawk raven crow robin sparrow swallow
finch canary parrot pigeon heron crane stork pelican penguin ostrich turkey
goose duck swan quail pheasant bursitis incendiary individualistic irritation rope-a-dope
all-optical polyposis homeland irrigation irritate optical optician physics chemistry
biology geology astronomy algebra geometry calculus grammar spelling
vocabulary sentence paragraph chapter library museum theater gallery stadium
station airport harbor bridge tunnel highway avenue boulevard alley plaza
market bakery butcher grocery pharmacy hospital clinic dentist surgeon nurse
doctor lawyer judge jury witness verdict justice police officer soldier
sailor pilot captain general colonel sergeant private citizen mayor governor
senator congress election ballot voter campaign speech debate treaty border
customs passport visa luggage journey voyage cruise ticket schedule arrival
departure engine wagon carriage bicycle tricycle scooter subway trolley ferry
freight cargo anchor rudder compass lantern beacon lighthouse pier dock wharf
canal dam reservoir aqueduct windmill watermill furnace boiler piston valve
gear lever pulley crank axle spoke hub rim tire brake pedal saddle handlebar
basket bell horn siren whistle drum trumpet violin cello piano organ flute
clarinet oboe bassoon harp banjo guitar fiddle melody harmony rhythm chorus
verse ballad anthem lullaby opera concert orchestra conductor composer singer
dancer painter sculptor poet novelist editor printer publisher reporter
journalist photographer architect engineer carpenter plumber electrician
mechanic welder miner farmer shepherd fisherman hunter trapper ranger scout
guide porter clerk cashier teller banker broker merchant trader peddler
vendor tailor cobbler barber stylist florist jeweler locksmith blacksmith
ability absence academy accent access accident account accuracy achievement
acid actor actress address adult advance advantage adventure advice affair
agency agenda agreement aisle alarm album alcohol allergy alliance ambition
amount analysis ancestor angle anger animal ankle answer antique anxiety
apology apparatus appeal appetite applause appointment approach approval
arena argument arrow article aspect assembly asset assistant atmosphere
attempt attention attitude audience author autumn average awareness baggage
balance balcony ballet balloon banner bargain barrel barrier basement basin
battery battle bay bead beam bean beard beast beauty bedroom beginning
behavior being belief bench benefit bicycle bill biography bite blade blame
blanket blast blaze blend blessing block bloom blossom board boast bonus
border bottom boundary bouquet bow brain brand bravery breath breeze brick
bride brilliance broom bubble bucket buckle bud budget buffalo builder bulb
bundle burden bureau burst bush cabbage cabin cabinet cable cactus cage
calendar camera camp canvas capital capsule caption carbon career cargo
carnival carpenter cartoon carving castle catalog cattle caution ceiling
celebration cell cement cemetery century ceremony chain chalk challenge
chamber champion chance chaos chapter charity charm chart chase cheek cheer
chest chicken chief childhood chimney chin choice chord circle circuit
circus citizen clarity classic clause claw clay cleaner climate climb cloak
closet cloth clothing clown club clue cluster coach coal coast coat cockpit
cocoon code coin collar collection colony column comb combat comedy comfort
command comment commerce committee companion compass competition complaint
concept concern concert conclusion condition conduct conference confidence
conflict confusion congress connection conscience consensus consent
consequence constant contact content contest context contract contrast
contribution convention conversation cookie copper copy coral cord core
corner corridor costume cottage cotton couch counsel counter countryside
couple courage course court cousin cover craft crash crate crater crayon
credit crew crime crisis critic crop crowd crown crumb crust crystal culture
cupboard curiosity current curtain curve cushion custom cycle cylinder
"""

# ---------------------------------------------------------------------------
# Chinese corpus: the shipped 350-character standard-list prefix (also the
# hanzi section of the DOT inventory).
# ---------------------------------------------------------------------------

ZH_CHARS = (
    "一乙二十丁厂七卜人入八九几儿了力乃刀又三于干亏士工土才寸下大丈与万上小口巾山千乞川亿个勺久凡及夕丸么广亡门义之尸弓己已子卫也女飞刃习叉马乡丰"
    "王井开夫天无元专云扎艺木五支厅不太犬区历尤友匹车巨牙屯比互切瓦止少日中冈贝内水见午牛手毛气升长仁什片仆化仇币仍仅斤爪反介父从今凶分乏公仓月氏"
    "勿欠风丹匀乌凤勾文六方火为斗忆订计户认心尺引丑巴孔队办以允予劝双书幻玉刊示末未击打巧正扑扒功扔去甘世古节本术可丙左厉右石布龙平灭轧东卡北占业"
    "旧帅归且旦目叶甲申叮电号田由史只央兄叼叫另叨叹四生失禾丘付仗代仙们仪白仔他斥瓜乎丛令用甩印乐句匆册犯外处冬鸟务包饥主市立闪兰半汁汇头汉宁穴它"
    "讨写让礼训必议讯记永司尼民出辽奶奴加召皮边发孕圣对台矛纠母幼丝式刑动扛寺吉扣考托老执巩圾扩扫地扬场耳共芒亚芝朽朴机权过臣再协西压厌在有百存而"
)

# DOT inventory hangul section (350 syllables).
DOT_HANGUL = (
    "근력빰빎볓눓놎닸눧횹딴놸꼈슁톺슫쏙릔닠욷헫멪액췅헒싄뵹튑탓뗸맊엶끝딤쪽뼈뀀럔왁쉰때헙딕씹넹넠윸렏뀼동팁콋숑꾼뙷됀쎔젝탢량갬판뻙줴륭뒸녻무섹씫읖푯짣걇땄더벡뢸궵틔쁠톱석효뷩웬놈즐낛쩩홍윽낼겇앾뗙깠뒌쭵땡졔쯕컵눞너겯룔뵵냥봥따궫콉벐넵늿칀쓕퉜홈갲튬꿰슝캐약꽏렜냠씻짬겱똴엠푿샹잔껄떙꽵죕휏휀뚜녘붎솣왈눽죌멈곺굗꾔병큐코꺵뚵뱰컻뤳텯늅낡찔원퀑곻휜솝솖핖긇떽림녓삷뱡팟쪨룩복냄활춧횜롄샾용욂돼궏뮊뿕댝꼱븨춥멤짊획뺌줠캼놂툇드빹싼컥쒐숄셍챌뉍농뮥램룡닔차쪠숼뚤퀫갋쮐뛤볕튝섪옛걥혽클뭣멂섿귕퍅솜뱝젆루렌뤄똡랕젼펨짤앧뤠쌩쑙빠탥썅뱔퓌빔첟쳬매댖캽툠옌꺋뗟쭤똑껌낕쪅홄턈땅즁선걍쵹쪁뮈씰뒜쟬릘쥠딋릅쳐몴외졂쌎왭뇯칰뜅퓀꿘힛분멭왣쒁췯쭊둳픰뙇첑뻴치먻랈믌엄큇뤅펑쬿려윌죘햣튄껐켕숱비싦떈켔뮉댧손삤노같뙴고쵭밟즘숴섄뢱"
)

DOT_ASCII_SYMBOLS = "~!@#$%^&*()-_=+[{}]\\|;:'\",<.>/?`"
DOT_FULLWIDTH = "·！￥…（）—、【】；：‘“，。？"
DOT_GREEK = "αβγδεζνξπρστηθικλμυφχψω"
DOT_KANA = (
    "あいうえおかきくけこさしすせそたちつてとなにぬねのはひふへほまみむめもやゆよらりるれろわをん"
    "アイウエオカキクケコサシスセソタチツテトナニヌネノハヒフヘホマミムメモヤユヨラリルレロワヲン"
    "がぎぐげござじずぜぞだぢづでどばびぶべぼぱぴぷぺぽガギグゲゴザジズゼゾダヂヅデドバビブベボパピプペポ"
)

# ---------------------------------------------------------------------------
# Korean corpus: product of common jamo plus hand-picked real syllables with
# rare (compound) finals so that every final family is reachable.
# ---------------------------------------------------------------------------

KO_PRODUCT_FINALS = ["", "ㄱ", "ㄴ", "ㄷ", "ㄹ", "ㅁ", "ㅂ", "ㅅ", "ㅇ", "ㅈ", "ㅎ"]
KO_EXTRA_SYLLABLES = (
    "핥훑밟넓읊옳앉않많끊닭맑밝늙삶젊곬값없몫넋앎옮긁묽붉얽욁있했갔왔됐겠엌밭솥숲앞옆잎녘꽃빛"
)

# ---------------------------------------------------------------------------
# Chinese component table: char -> comma-joined parts, recombinable flag.
# Decompositions follow common component-input conventions; entries whose
# part multiset collides with another entry are flagged 0 so recombination
# stays unique.
# ---------------------------------------------------------------------------

ZH_COMPONENTS = [
    ("究", "穴,九", 1), ("作", "亻,乍", 1), ("好", "女,子", 1), ("明", "日,月", 1),
    ("林", "木,木", 1), ("森", "木,木,木", 1), ("休", "亻,木", 1), ("什", "亻,十", 1),
    ("仁", "亻,二", 1), ("们", "亻,门", 1), ("他", "亻,也", 1), ("仙", "亻,山", 1),
    ("付", "亻,寸", 1), ("仗", "亻,丈", 1), ("仇", "亻,九", 1), ("化", "亻,匕", 1),
    ("仅", "亻,又", 1), ("亿", "亻,乙", 1), ("仍", "亻,乃", 1), ("件", "亻,牛", 1),
    ("但", "亻,旦", 1), ("位", "亻,立", 1), ("住", "亻,主", 1), ("伯", "亻,白", 1),
    ("仔", "亻,子", 1), ("从", "人,人", 1), ("众", "人,人,人", 1), ("双", "又,又", 1),
    ("朋", "月,月", 1), ("吕", "口,口", 1), ("品", "口,口,口", 1), ("晶", "日,日,日", 1),
    ("昌", "日,日", 1), ("炎", "火,火", 1), ("淼", "水,水,水", 1), ("磊", "石,石,石", 1),
    ("焱", "火,火,火", 1), ("圭", "土,土", 1), ("垚", "土,土,土", 1), ("多", "夕,夕", 1),
    ("出", "山,山", 1), ("坐", "人,人,土", 1), ("丛", "人,人,一", 1),
    ("分", "八,刀", 1), ("公", "八,厶", 1), ("只", "口,八", 1), ("切", "七,刀", 1),
    ("召", "刀,口", 0), ("叨", "口,刀", 0), ("加", "力,口", 0), ("另", "口,力", 0),
    ("叶", "口,十", 0), ("古", "十,口", 0), ("杏", "木,口", 1), ("叹", "口,又", 1),
    ("叼", "口,刁", 1), ("兄", "口,儿", 1), ("台", "厶,口", 1), ("允", "厶,儿", 1),
    ("去", "土,厶", 1), ("云", "二,厶", 1), ("吴", "口,天", 1), ("吧", "口,巴", 1),
    ("吗", "口,马", 1), ("吃", "口,乞", 1), ("吹", "口,欠", 1), ("告", "牛,口", 1),
    ("名", "夕,口", 1), ("呈", "口,王", 1), ("味", "口,未", 1), ("鸣", "口,鸟", 1),
    ("哈", "口,合", 1), ("合", "人,一,口", 1), ("拿", "合,手", 1), ("盒", "合,皿", 1),
    ("鸽", "合,鸟", 1), ("答", "竹,合", 1), ("给", "纟,合", 1), ("蛤", "虫,合", 1),
    ("字", "宀,子", 1), ("安", "宀,女", 1), ("宝", "宀,玉", 1), ("家", "宀,豕", 1),
    ("室", "宀,至", 1), ("宁", "宀,丁", 1), ("它", "宀,匕", 1), ("穴", "宀,八", 1),
    ("空", "穴,工", 1), ("窄", "穴,乍", 1), ("突", "穴,犬", 1), ("灾", "宀,火", 1),
    ("岩", "山,石", 1), ("岗", "山,冈", 1), ("尖", "小,大", 1), ("尘", "小,土", 1),
    ("岁", "山,夕", 1), ("灶", "火,土", 1), ("灯", "火,丁", 1), ("灿", "火,山", 1),
    ("烂", "火,兰", 1), ("炉", "火,户", 1), ("炒", "火,少", 1), ("炊", "火,欠", 1),
    ("烟", "火,因", 1), ("因", "囗,大", 1), ("困", "囗,木", 1), ("回", "囗,口", 1),
    ("团", "囗,才", 1), ("国", "囗,玉", 1), ("园", "囗,元", 1), ("固", "囗,古", 1),
    ("想", "相,心", 1), ("相", "木,目", 1), ("忍", "刃,心", 1), ("志", "士,心", 1),
    ("忘", "亡,心", 1), ("忠", "中,心", 1), ("念", "今,心", 1), ("思", "田,心", 1),
    ("息", "自,心", 1), ("恩", "因,心", 1), ("意", "音,心", 1), ("音", "立,日", 1),
    ("闷", "门,心", 1), ("问", "门,口", 1), ("间", "门,日", 1), ("闪", "门,人", 1),
    ("闯", "门,马", 1), ("闲", "门,木", 1), ("闻", "门,耳", 1),
    ("男", "田,力", 1), ("苗", "艹,田", 1), ("花", "艹,化", 1), ("草", "艹,早", 1),
    ("苦", "艹,古", 1), ("芝", "艹,之", 1), ("芒", "艹,亡", 1), ("艺", "艹,乙", 1),
    ("芽", "艹,牙", 1), ("苹", "艹,平", 1), ("早", "日,十", 1), ("旦", "日,一", 1),
    ("百", "一,白", 1), ("皇", "白,王", 1), ("泉", "白,水", 1), ("全", "人,王", 1),
    ("会", "人,云", 1), ("李", "木,子", 1), ("杜", "木,土", 1), ("村", "木,寸", 1),
    ("材", "木,才", 1), ("板", "木,反", 1), ("枫", "木,风", 1), ("枝", "木,支", 1),
    ("松", "木,公", 1), ("析", "木,斤", 1), ("柏", "木,白", 1), ("栖", "木,西", 1),
    ("桂", "木,圭", 1), ("棋", "木,其", 1), ("棵", "木,果", 1), ("果", "田,木", 1),
    ("柴", "此,木", 1), ("梦", "林,夕", 1), ("幼", "幺,力", 1),
    ("边", "辶,力", 1), ("过", "辶,寸", 1), ("达", "辶,大", 1), ("迈", "辶,万", 1),
    ("辽", "辶,了", 1), ("迁", "辶,千", 1), ("运", "辶,云", 1), ("还", "辶,不", 1),
    ("进", "辶,井", 1), ("远", "辶,元", 1), ("连", "辶,车", 1), ("迟", "辶,尺", 1),
    ("选", "辶,先", 1),
    ("汁", "氵,十", 1), ("汉", "氵,又", 1), ("江", "氵,工", 1), ("池", "氵,也", 1),
    ("沙", "氵,少", 1), ("河", "氵,可", 1), ("油", "氵,由", 1), ("治", "氵,台", 1),
    ("洒", "氵,西", 1), ("洗", "氵,先", 1), ("活", "氵,舌", 1), ("海", "氵,每", 1),
    ("淋", "氵,林", 1), ("洋", "氵,羊", 1), ("清", "氵,青", 1), ("湖", "氵,胡", 1),
    ("法", "氵,去", 1), ("沐", "氵,木", 1), ("汗", "氵,干", 1), ("污", "氵,亏", 1),
    ("湜", "氵,是", 1), ("波", "氵,皮", 1), ("胡", "古,月", 1),
    ("打", "扌,丁", 1), ("扑", "扌,卜", 1), ("扒", "扌,八", 1), ("扣", "扌,口", 1),
    ("扛", "扌,工", 1), ("执", "扌,丸", 1), ("扩", "扌,广", 1), ("找", "扌,戈", 1),
    ("把", "扌,巴", 1), ("拉", "扌,立", 1), ("拦", "扌,兰", 1), ("抬", "扌,台", 1),
    ("担", "扌,旦", 1), ("押", "扌,甲", 1), ("抽", "扌,由", 1), ("拍", "扌,白", 1),
    ("拥", "扌,用", 1), ("持", "扌,寺", 1), ("操", "扌,品,木", 1), ("看", "手,目", 1),
    ("妈", "女,马", 1), ("奶", "女,乃", 1), ("姑", "女,古", 1), ("姐", "女,且", 1),
    ("妹", "女,未", 1), ("始", "女,台", 1), ("娘", "女,良", 1), ("如", "女,口", 1),
    ("妙", "女,少", 1), ("姓", "女,生", 1), ("要", "西,女", 1), ("票", "西,示", 1),
    ("雷", "雨,田", 1), ("零", "雨,令", 1), ("雾", "雨,务", 1), ("霜", "雨,相", 1),
    ("需", "雨,而", 1),
    ("红", "纟,工", 1), ("级", "纟,及", 1), ("纸", "纟,氏", 1), ("纱", "纟,少", 1),
    ("细", "纟,田", 1), ("组", "纟,且", 1), ("终", "纟,冬", 1), ("结", "纟,吉", 1),
    ("绿", "纟,录", 1),
    ("钟", "钅,中", 1), ("钉", "钅,丁", 1), ("针", "钅,十", 1), ("钢", "钅,冈", 1),
    ("银", "钅,艮", 1), ("铜", "钅,同", 1), ("错", "钅,昔", 1),
    ("饭", "饣,反", 1), ("饥", "饣,几", 1), ("饱", "饣,包", 1),
    ("战", "占,戈", 1), ("划", "戈,刂", 1), ("刚", "冈,刂", 1), ("别", "另,刂", 1),
    ("到", "至,刂", 1), ("刻", "亥,刂", 1), ("利", "禾,刂", 1), ("和", "禾,口", 1),
    ("秋", "禾,火", 1), ("种", "禾,中", 1), ("科", "禾,斗", 1), ("秒", "禾,少", 1),
    ("香", "禾,日", 1), ("季", "禾,子", 1), ("委", "禾,女", 1), ("秀", "禾,乃", 1),
    ("私", "禾,厶", 1),
    ("功", "工,力", 1), ("攻", "工,攵", 1), ("放", "方,攵", 1), ("故", "古,攵", 1),
    ("败", "贝,攵", 1), ("政", "正,攵", 1), ("敌", "舌,攵", 1), ("牧", "牛,攵", 1),
    ("物", "牛,勿", 1), ("特", "牛,寺", 1), ("时", "日,寺", 1), ("诗", "讠,寺", 1),
    ("等", "竹,寺", 1), ("笔", "竹,毛", 1), ("箱", "竹,相", 1), ("符", "竹,付", 1),
    ("员", "口,贝", 1), ("贴", "贝,占", 1), ("财", "贝,才", 1), ("购", "贝,勾", 1),
    ("货", "化,贝", 1), ("贺", "加,贝", 1),
    ("认", "讠,人", 1), ("讨", "讠,寸", 1), ("让", "讠,上", 1), ("训", "讠,川", 1),
    ("记", "讠,己", 1), ("讲", "讠,井", 1), ("语", "讠,吾", 1), ("请", "讠,青", 1),
    ("课", "讠,果", 1), ("谁", "讠,隹", 1), ("访", "讠,方", 1), ("评", "讠,平", 1),
    ("词", "讠,司", 1), ("话", "讠,舌", 1), ("计", "讠,十", 1), ("订", "讠,丁", 1),
    ("议", "讠,义", 1),
    ("孙", "子,小", 1), ("孕", "乃,子", 1), ("籽", "米,子", 1), ("类", "米,大", 1),
    ("粉", "米,分", 1), ("料", "米,斗", 1), ("粗", "米,且", 1),
    ("坏", "土,不", 1), ("坝", "土,贝", 1), ("城", "土,成", 1), ("坡", "土,皮", 1),
    ("地", "土,也", 1), ("基", "其,土", 1), ("垃", "土,立", 1), ("圾", "土,及", 1),
    ("均", "土,匀", 1), ("坊", "土,方", 1), ("坛", "土,云", 1), ("堂", "尚,土", 1),
    ("破", "石,皮", 1), ("砂", "石,少", 1), ("码", "石,马", 1), ("研", "石,开", 1),
    ("矿", "石,广", 1), ("骂", "口,口,马", 1), ("驼", "马,它", 1), ("驶", "马,史", 1),
    ("骑", "马,奇", 1), ("奇", "大,可", 1), ("奋", "大,田", 1), ("夺", "大,寸", 1),
    ("夸", "大,亏", 1), ("美", "羊,大", 1),
    ("鸡", "又,鸟", 1), ("鸭", "甲,鸟", 1), ("鹅", "我,鸟", 1),
    ("蚁", "虫,乙", 1), ("虾", "虫,下", 1), ("蚂", "虫,马", 1), ("蚊", "虫,文", 1),
    ("圣", "又,土", 1), ("怕", "忄,白", 1), ("忙", "忄,亡", 1), ("怀", "忄,不", 1),
    ("性", "忄,生", 1), ("情", "忄,青", 1),
    ("肚", "月,土", 1), ("肝", "月,干", 1), ("肥", "月,巴", 1), ("胜", "月,生", 1),
    ("胆", "月,旦", 1), ("期", "其,月", 1), ("阴", "阝,月", 1), ("阳", "阝,日", 1),
    ("防", "阝,方", 1), ("队", "阝,人", 1), ("阵", "阝,车", 1), ("陈", "阝,东", 1),
    ("院", "阝,完", 1), ("都", "者,阝", 1), ("助", "且,力", 1),
    ("叮", "口,丁", 1), ("盯", "目,丁", 1), ("顶", "丁,页", 1),
    ("取", "耳,又", 1), ("艰", "又,艮", 1), ("难", "又,隹", 1), ("欢", "又,欠", 1),
    ("对", "又,寸", 1), ("劝", "又,力", 1), ("反", "厂,又", 1),
    ("协", "十,办", 1), ("华", "化,十", 1), ("毕", "比,十", 1), ("支", "十,又", 1),
    ("初", "衤,刀", 1), ("被", "衤,皮", 1), ("病", "疒,丙", 1), ("疼", "疒,冬", 1),
    ("疲", "疒,皮", 1), ("章", "立,早", 1), ("站", "立,占", 1),
]

# Decompositions listed with an explicit second option (split alternatives).
ZH_COMPONENT_ALTS = [
    ("意", "立,日,心", 0),
    ("森", "木,林", 0),
    ("晶", "日,昌", 0),
    ("想", "木,目,心", 0),
    ("操", "扌,喿", 0),
]

# ---------------------------------------------------------------------------
# Homoglyph / variant tables.
# ---------------------------------------------------------------------------

EN_HOMOGLYPHS = [
    ("a", "а,ɑ"), ("b", "Ь"), ("c", "с,ϲ"), ("d", "ԁ"), ("e", "е"), ("f", "ḟ"),
    ("g", "ɡ"), ("h", "һ"), ("i", "і"), ("j", "ј"), ("k", "к"), ("l", "ӏ"),
    ("m", "ṃ"), ("n", "ṇ"), ("o", "о"), ("p", "р"), ("q", "ԛ"), ("r", "ṛ"),
    ("s", "ѕ"), ("t", "ṭ"), ("u", "ս"), ("v", "ѵ"), ("w", "ԝ"), ("x", "х"),
    ("y", "у"), ("z", "ᴢ"),
    ("A", "А"), ("B", "В"), ("C", "С"), ("E", "Е"), ("G", "Ԍ"), ("H", "Н"),
    ("I", "І"), ("J", "Ј"), ("K", "К"), ("M", "М"), ("N", "Ν"), ("O", "О"),
    ("P", "Р"), ("Q", "Ԛ"), ("S", "Ѕ"), ("T", "Т"), ("U", "Ս"), ("V", "Ѵ"),
    ("W", "Ԝ"), ("X", "Х"), ("Y", "У"), ("Z", "Ζ"),
]

# Simplified -> lookalike/"Martian" style variants: traditional forms plus
# radical-decorated homophones seen in informal text. One row per source.
ZH_VARIANTS = [
    ("电", "電"), ("后", "後"), ("发", "發"), ("东", "東"), ("车", "車"), ("门", "門"),
    ("马", "馬"), ("鸟", "鳥"), ("龙", "龍"), ("万", "萬"), ("与", "與"), ("书", "書"),
    ("云", "雲"), ("艺", "藝"), ("历", "歷"), ("区", "區"), ("贝", "貝"), ("见", "見"),
    ("气", "氣"), ("长", "長"), ("币", "幣"), ("仅", "僅"), ("风", "風"), ("乌", "烏"),
    ("凤", "鳳"), ("订", "訂"), ("计", "計"), ("户", "戶"), ("认", "認"), ("丑", "醜"),
    ("队", "隊"), ("办", "辦"), ("劝", "勸"), ("双", "雙"), ("击", "擊"), ("节", "節"),
    ("术", "術"), ("厉", "厲"), ("灭", "滅"), ("轧", "軋"), ("业", "業"),
    ("旧", "舊"), ("帅", "帥"), ("归", "歸"), ("叶", "葉"),
    ("号", "號"), ("叹", "嘆"), ("们", "們"), ("仪", "儀"), ("乐", "樂"), ("册", "冊"),
    ("处", "處"), ("务", "務"), ("饥", "飢"), ("闪", "閃"), ("兰", "蘭"),
    ("汇", "匯"), ("头", "頭"), ("汉", "漢"), ("宁", "寧"), ("让", "讓"), ("礼", "禮"),
    ("训", "訓"), ("议", "議"), ("讯", "訊"), ("记", "記"), ("辽", "遼"), ("边", "邊"),
    ("圣", "聖"), ("对", "對"), ("纠", "糾"), ("丝", "絲"), ("动", "動"),
    ("执", "執"), ("巩", "鞏"), ("扩", "擴"), ("扫", "掃"), ("扬", "揚"), ("场", "場"),
    ("亚", "亞"), ("机", "機"), ("权", "權"), ("过", "過"), ("压", "壓"),
    ("厌", "厭"), ("导", "導"), ("演", "湮"), ("是", "湜"), ("中", "狆"), ("的", "哋"),
    ("幕", "募"), ("英", "渶"), ("开", "開"),
    ("专", "專"), ("无", "無"), ("习", "習"), ("乡", "鄉"), ("丰", "豐"),
    ("飞", "飛"), ("刃", "刄"), ("亿", "億"), ("个", "個"), ("广", "廣"),
    ("亡", "兦"), ("义", "義"), ("卫", "衛"), ("也", "吔"), ("女", "钕"),
    ("木", "朩"), ("五", "伍"), ("不", "卟"), ("太", "呔"),
]

DIGIT_VARIANTS = [
    ("0", "O,〇,о"), ("1", "l,I,|"), ("2", "Z"), ("3", "Ɛ,З"), ("4", "Ч"),
    ("5", "S,Ƽ"), ("6", "б"), ("7", "ㄱ"), ("8", "B"), ("9", "g,q"),
]

# ---------------------------------------------------------------------------
# Topic pool: aligned en/zh/ko topic phrases over six domains, expanded
# combinatorially (qualifier x base) to exceed 1,000 rows.
# ---------------------------------------------------------------------------

TOPIC_BASES = [
    # (en, zh, ko, domain)
    ("mountain", "山", "산", "geography"), ("river", "河", "강", "geography"),
    ("lake", "湖", "호수", "geography"), ("island", "岛", "섬", "geography"),
    ("desert", "沙漠", "사막", "geography"), ("forest", "森林", "숲", "geography"),
    ("ocean", "海洋", "바다", "geography"), ("volcano", "火山", "화산", "geography"),
    ("valley", "山谷", "계곡", "geography"), ("glacier", "冰川", "빙하", "geography"),
    ("family", "家庭", "가족", "family-education"), ("school", "学校", "학교", "family-education"),
    ("teacher", "老师", "선생님", "family-education"), ("student", "学生", "학생", "family-education"),
    ("library", "图书馆", "도서관", "family-education"), ("homework", "作业", "숙제", "family-education"),
    ("classroom", "教室", "교실", "family-education"), ("parents", "父母", "부모", "family-education"),
    ("brothers", "兄弟", "형제", "family-education"), ("kindergarten", "幼儿园", "유치원", "family-education"),
    ("laboratory", "实验室", "실험실", "science-workplace"), ("computer", "电脑", "컴퓨터", "science-workplace"),
    ("experiment", "实验", "실험", "science-workplace"), ("office", "办公室", "사무실", "science-workplace"),
    ("meeting", "会议", "회의", "science-workplace"), ("robot", "机器人", "로봇", "science-workplace"),
    ("energy", "能源", "에너지", "science-workplace"), ("factory", "工厂", "공장", "science-workplace"),
    ("research", "研究", "연구", "science-workplace"), ("engineer", "工程师", "엔지니어", "science-workplace"),
    ("festival", "节日", "축제", "holidays-culture"), ("holiday", "假日", "휴일", "holidays-culture"),
    ("music", "音乐", "음악", "holidays-culture"), ("painting", "绘画", "그림", "holidays-culture"),
    ("museum", "博物馆", "박물관", "holidays-culture"), ("tradition", "传统", "전통", "holidays-culture"),
    ("wedding", "婚礼", "결혼식", "holidays-culture"), ("birthday", "生日", "생일", "holidays-culture"),
    ("concert", "音乐会", "음악회", "holidays-culture"), ("theater", "剧院", "극장", "holidays-culture"),
    ("football", "足球", "축구", "sports-transport"), ("basketball", "篮球", "농구", "sports-transport"),
    ("swimming", "游泳", "수영", "sports-transport"), ("marathon", "马拉松", "마라톤", "sports-transport"),
    ("bicycle", "自行车", "자전거", "sports-transport"), ("subway", "地铁", "지하철", "sports-transport"),
    ("airplane", "飞机", "비행기", "sports-transport"), ("train", "火车", "기차", "sports-transport"),
    ("harbor", "港口", "항구", "sports-transport"), ("highway", "高速公路", "고속도로", "sports-transport"),
    ("weather", "天气", "날씨", "weather-health"), ("climate", "气候", "기후", "weather-health"),
    ("rain", "雨", "비", "weather-health"), ("snow", "雪", "눈", "weather-health"),
    ("typhoon", "台风", "태풍", "weather-health"), ("health", "健康", "건강", "weather-health"),
    ("hospital", "医院", "병원", "weather-health"), ("medicine", "药", "약", "weather-health"),
    ("exercise", "运动", "운동", "weather-health"), ("sleep", "睡眠", "수면", "weather-health"),
]

TOPIC_QUALIFIERS = [
    ("big", "大大的", "큰"), ("small", "小小的", "작은"), ("old", "古老的", "오래된"),
    ("new", "崭新的", "새로운"), ("beautiful", "美丽的", "아름다운"), ("quiet", "安静的", "조용한"),
    ("busy", "繁忙的", "바쁜"), ("modern", "现代的", "현대적인"), ("traditional", "传统的", "전통적인"),
    ("famous", "著名的", "유명한"), ("distant", "遥远的", "먼"), ("nearby", "附近的", "가까운"),
    ("northern", "北方的", "북쪽의"), ("southern", "南方的", "남쪽의"), ("winter", "冬天的", "겨울의"),
    ("summer", "夏天的", "여름의"), ("morning", "早晨的", "아침의"), ("future", "未来的", "미래의"),
]

# ---------------------------------------------------------------------------
# Korean riddle seed entries (real words); filler is derived below.
# ---------------------------------------------------------------------------

KO_RIDDLE_WORDS = [
    ("물", "water", "Nature"), ("불", "fire", "Nature"), ("눈", "snow", "Weather"),
    ("비", "rain", "Weather"), ("밥", "rice", "Food"), ("산", "mountain", "Nature"),
    ("강", "river", "Nature"), ("꿈", "dream", "Life"), ("돈", "money", "Life"),
    ("말", "horse", "Animals"), ("개", "dog", "Animals"), ("새", "bird", "Animals"),
    ("곰", "bear", "Animals"), ("꽃", "flower", "Nature"), ("길", "road", "Travel"),
    ("밤", "night", "Time"), ("낮", "day", "Time"), ("봄", "spring", "Seasons"),
    ("손", "hand", "Body"), ("발", "foot", "Body"), ("귀", "ear", "Body"),
    ("코", "nose", "Body"), ("입", "mouth", "Body"), ("몸", "body", "Body"),
    ("집", "house", "Home"), ("문", "door", "Home"), ("방", "room", "Home"),
    ("책", "book", "Education"), ("글", "writing", "Education"), ("빵", "bread", "Food"),
    ("국", "soup", "Food"), ("차", "tea", "Food"), ("술", "wine", "Food"),
    ("옷", "clothes", "Life"), ("신", "shoes", "Life"), ("해", "sun", "Nature"),
    ("달", "moon", "Nature"), ("별", "star", "Nature"), ("땅", "earth", "Nature"),
    ("학교", "school", "Education"), ("선생", "teacher", "Education"), ("학생", "student", "Education"),
    ("공부", "study", "Education"), ("숙제", "homework", "Education"), ("교실", "classroom", "Education"),
    ("친구", "friend", "Life"), ("가족", "family", "Family"), ("부모", "parents", "Family"),
    ("형제", "brothers", "Family"), ("바다", "sea", "Nature"), ("하늘", "sky", "Nature"),
    ("구름", "cloud", "Weather"), ("바람", "wind", "Weather"), ("번개", "lightning", "Weather"),
    ("천둥", "thunder", "Weather"), ("나무", "tree", "Nature"), ("사랑", "love", "Life"),
    ("행복", "happiness", "Life"), ("슬픔", "sadness", "Life"), ("기쁨", "joy", "Life"),
    ("노래", "song", "Music"), ("음악", "music", "Music"), ("영화", "movie", "Culture"),
    ("연극", "play", "Culture"), ("그림", "painting", "Art"), ("사진", "photo", "Art"),
    ("여행", "travel", "Travel"), ("기차", "train", "Travel"), ("버스", "bus", "Travel"),
    ("공항", "airport", "Travel"), ("호텔", "hotel", "Travel"), ("시장", "market", "Life"),
    ("가게", "shop", "Life"), ("음식", "food", "Food"), ("과일", "fruit", "Food"),
    ("사과", "apple", "Food"), ("포도", "grape", "Food"), ("수박", "watermelon", "Food"),
    ("딸기", "strawberry", "Food"), ("김치", "kimchi", "Food"), ("라면", "ramen", "Food"),
    ("우유", "milk", "Food"), ("커피", "coffee", "Food"), ("녹차", "green tea", "Food"),
    ("아침", "morning", "Time"), ("저녁", "evening", "Time"), ("오늘", "today", "Time"),
    ("내일", "tomorrow", "Time"), ("어제", "yesterday", "Time"), ("시간", "time", "Time"),
    ("겨울", "winter", "Seasons"), ("여름", "summer", "Seasons"), ("가을", "autumn", "Seasons"),
    ("날씨", "weather", "Weather"), ("건강", "health", "Health"), ("병원", "hospital", "Health"),
    ("의사", "doctor", "Health"), ("약국", "pharmacy", "Health"), ("운동", "exercise", "Sports"),
    ("축구", "soccer", "Sports"), ("야구", "baseball", "Sports"), ("농구", "basketball", "Sports"),
    ("수영", "swimming", "Sports"), ("등산", "hiking", "Sports"), ("노을", "sunset", "Nature"),
    ("토끼", "rabbit", "Animals"), ("사자", "lion", "Animals"), ("돼지", "pig", "Animals"),
    ("오리", "duck", "Animals"), ("거북", "turtle", "Animals"), ("나비", "butterfly", "Animals"),
    ("벌레", "bug", "Animals"), ("은행", "bank", "Life"), ("회사", "company", "Work"),
    ("회의", "meeting", "Work"), ("직업", "job", "Work"), ("월급", "salary", "Work"),
    ("전화", "phone", "Technology"), ("신문", "newspaper", "Media"), ("잡지", "magazine", "Media"),
    ("편지", "letter", "Communication"), ("우표", "stamp", "Communication"), ("약속", "promise", "Life"),
    ("선물", "gift", "Life"), ("생일", "birthday", "Life"), ("결혼", "marriage", "Life"),
    ("잔치", "feast", "Culture"), ("명절", "holiday", "Culture"), ("설날", "new year", "Culture"),
    ("추석", "harvest festival", "Culture"),
    ("선생님", "teacher", "Education"), ("유치원", "kindergarten", "Education"),
    ("도서관", "library", "Education"), ("대학교", "university", "Education"),
    ("박물관", "museum", "Culture"), ("미술관", "art gallery", "Culture"),
    ("영화관", "cinema", "Culture"), ("노래방", "karaoke", "Culture"),
    ("놀이터", "playground", "Life"), ("운동장", "stadium", "Sports"),
    ("수영장", "swimming pool", "Sports"), ("자전거", "bicycle", "Travel"),
    ("자동차", "car", "Travel"), ("지하철", "subway", "Travel"),
    ("비행기", "airplane", "Travel"), ("기차역", "train station", "Travel"),
    ("고양이", "cat", "Animals"), ("강아지", "puppy", "Animals"),
    ("호랑이", "tiger", "Animals"), ("코끼리", "elephant", "Animals"),
    ("원숭이", "monkey", "Animals"), ("물고기", "fish", "Animals"),
    ("무지개", "rainbow", "Weather"), ("소나기", "rain shower", "Weather"),
    ("눈사람", "snowman", "Seasons"), ("할머니", "grandmother", "Family"),
    ("아버지", "father", "Family"), ("어머니", "mother", "Family"),
    ("아저씨", "uncle", "Family"), ("어린이", "child", "Family"),
    ("젓가락", "chopsticks", "Food"), ("숟가락", "spoon", "Food"),
    ("냉장고", "refrigerator", "Home"), ("세탁기", "washing machine", "Home"),
    ("청소기", "vacuum cleaner", "Home"), ("컴퓨터", "computer", "Technology"),
    ("휴대폰", "cell phone", "Technology"), ("카메라", "camera", "Technology"),
    ("피아노", "piano", "Music"), ("목소리", "voice", "Body"),
    ("손가락", "finger", "Body"), ("발가락", "toe", "Body"),
    ("병아리", "chick", "Animals"), ("개나리", "forsythia", "Nature"),
    ("진달래", "azalea", "Nature"), ("민들레", "dandelion", "Nature"),
    ("소방관", "firefighter", "Work"), ("경찰관", "police officer", "Work"),
    ("과학자", "scientist", "Work"), ("요리사", "chef", "Work"),
    ("간호사", "nurse", "Health"),
    ("할아버지", "grandfather", "Family"), ("아주머니", "aunt", "Family"),
    ("해바라기", "sunflower", "Nature"), ("텔레비전", "television", "Technology"),
    ("초등학교", "elementary school", "Education"), ("고등학교", "high school", "Education"),
    ("대한민국", "republic of korea", "Country"), ("바이올린", "violin", "Music"),
    ("머리카락", "hair", "Body"), ("미끄럼틀", "slide", "Play"),
    ("줄다리기", "tug of war", "Play"), ("운동선수", "athlete", "Sports"),
    ("축구선수", "soccer player", "Sports"), ("놀이공원", "amusement park", "Travel"),
    ("어린이날", "childrens day", "Culture"), ("생일잔치", "birthday party", "Culture"),
    ("김치찌개", "kimchi stew", "Food"), ("된장찌개", "soybean stew", "Food"),
    ("야구선수", "baseball player", "Sports"), ("비빔냉면", "spicy cold noodles", "Food"),
]

# Classic Chinese character riddles with component-table-verified answers.
ZH_RIDDLES_HAND = [
    ("一口咬掉牛尾巴（猜一字）", "告"), ("七十二小时（猜一字）", "晶"),
    ("十张口，一颗心（猜一字）", "思"), ("山上还有山（猜一字）", "出"),
    ("两个月亮并排走（猜一字）", "朋"), ("三张嘴叠在一起（猜一字）", "品"),
    ("两棵树并排站（猜一字）", "林"), ("三棵树长成一片（猜一字）", "森"),
    ("两个人前后走（猜一字）", "从"), ("三个人挤在一起（猜一字）", "众"),
    ("两团火烧起来（猜一字）", "炎"), ("三个水聚在一起（猜一字）", "淼"),
    ("三块石头垒起来（猜一字）", "磊"), ("门里有个人（猜一字）", "闪"),
    ("门里有张嘴（猜一字）", "问"), ("门里有颗心（猜一字）", "闷"),
    ("门里有个太阳（猜一字）", "间"), ("门里有只耳朵（猜一字）", "闻"),
    ("门里有匹马（猜一字）", "闯"), ("屋顶下有个女子（猜一字）", "安"),
    ("屋顶下养着一头豕（猜一字）", "家"), ("太阳和月亮在一起（猜一字）", "明"),
    ("女子抱着孩子（猜一字）", "好"), ("小小的土粒（猜一字）", "尘"),
    ("上小下大（猜一字）", "尖"), ("口在木上（猜一字）", "杏"),
    ("洞穴下面一个九（猜一字）", "究"),
    ("田里使力气的人（猜一字）", "男"), ("白水流下来（猜一字）", "泉"),
]

# English structural riddle stock phrasings (filled from the corpus below).
EN_JOIN_TEMPLATE = "What single English word is formed by joining '{a}' and '{b}' in that order?"
EN_ACROSTIC_TEMPLATE = "Take the first letter of each word in order: {words}. What word do the letters spell?"
ZH_COMBINE_TEMPLATE = "哪个汉字由部件“{parts}”组合而成？（猜一字）"
ZH_REMOVE_TEMPLATE = "把“{char}”去掉“{part}”后剩下哪个部件？"
ZH_POSITION_TEMPLATES = ["“{text}”的第一个字是什么？", "“{text}”的最后一个字是什么？"]


def write_lines(path: Path, lines, header: str | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    body = "\n".join(lines) + "\n"
    if header:
        body = f"# {header}\n" + body
    path.write_text(body, encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)} ({len(lines)} lines)")


def build_corpora() -> tuple[list[str], list[str], list[str]]:
    seen = set()
    en = []
    for word in EN_WORDS.split():
        if word not in seen:
            seen.add(word)
            en.append(word)
    write_lines(RES / "corpus_en.txt", en, "English word corpus seed")

    zh = list(dict.fromkeys(ZH_CHARS))
    write_lines(RES / "corpus_zh.txt", zh, "Chinese character corpus seed (standard-list prefix)")

    ko = []
    for ini in hangul.INITIALS:
        for med in hangul.MEDIALS:
            for fin in KO_PRODUCT_FINALS:
                ko.append(hangul.compose(hangul.JamoTriple(ini, med, fin or None)))
    for extra in KO_EXTRA_SYLLABLES:
        if extra not in ko:
            ko.append(extra)
    write_lines(RES / "corpus_ko.txt", ko, "Korean syllable corpus seed")
    return en, zh, ko


def build_component_table() -> dict[str, list[tuple[list[str], int]]]:
    table: dict[str, list[tuple[list[str], int]]] = {}
    for char, parts, flag in ZH_COMPONENTS + ZH_COMPONENT_ALTS:
        table.setdefault(char, []).append((parts.split(","), flag))
    # recombinable entries must be unique by part multiset
    index: dict[tuple[str, ...], str] = {}
    for char, decs in table.items():
        for parts, flag in decs:
            if not flag:
                continue
            key = tuple(sorted(parts))
            if key in index and index[key] != char:
                raise SystemExit(f"recombinable collision: {char} vs {index[key]} on {key}")
            index[key] = char
    lines = []
    for char, decs in table.items():
        for parts, flag in decs:
            lines.append(f"{char}\t{','.join(parts)}\t{flag}")
    write_lines(RES / "components_zh.tsv", lines, "char<TAB>components<TAB>recombinable")
    return table


def build_variant_tables() -> None:
    write_lines(RES / "homoglyphs_en.tsv",
                [f"{src}\t{var}" for src, var in EN_HOMOGLYPHS],
                "source<TAB>variants")
    seen: dict[str, str] = {}
    lines = []
    for src, var in ZH_VARIANTS:
        if var == src:
            raise SystemExit(f"variant equals source: {src}")
        if var in seen:
            raise SystemExit(f"variant {var} maps to both {seen[var]} and {src}")
        seen[var] = src
        lines.append(f"{src}\t{var}")
    write_lines(RES / "variants_zh.tsv", lines, "source<TAB>variants")
    write_lines(RES / "variants_digit.tsv",
                [f"{src}\t{var}" for src, var in DIGIT_VARIANTS],
                "source<TAB>variants")


def build_topics() -> None:
    lines = []
    for (b_en, b_zh, b_ko, domain) in TOPIC_BASES:
        for (q_en, q_zh, q_ko) in TOPIC_QUALIFIERS:
            lines.append(f"{q_en} {b_en}\t{q_zh}{b_zh}\t{q_ko} {b_ko}\t{domain}")
    write_lines(RES / "topics.tsv", lines, "en<TAB>zh<TAB>ko<TAB>domain")


def build_ko_riddles(ko_corpus: list[str]) -> None:
    rng = random.Random("riddles-ko-seed")
    buckets = {1: 120, 2: 440, 3: 320, 4: 220}
    rows: list[tuple[str, str, str]] = []
    seen_words = set()
    for word, gloss, theme in KO_RIDDLE_WORDS:
        if word in seen_words:
            continue
        seen_words.add(word)
        rows.append((word, gloss, theme))
    counts = Counter(len(w) for w, _, _ in rows)
    themes = sorted({t for _, _, t in rows})
    common = [s for s in ko_corpus if hangul.decompose(s).final in (None, "ㄴ", "ㅇ", "ㄹ", "ㅁ")]
    for length, want in buckets.items():
        while counts[length] < want:
            word = "".join(rng.choice(common) for _ in range(length))
            if word in seen_words:
                continue
            seen_words.add(word)
            rows.append((word, f"synthetic filler {len(rows):04d}", rng.choice(themes)))
            counts[length] += 1
    lines = [f"{w},{g},{t}" for w, g, t in rows]
    write_lines(RES / "riddles_ko.csv", lines, "word,gloss,theme")


def build_en_riddles(en_corpus: list[str]) -> None:
    rng = random.Random("riddles-en-seed")
    words = [w for w in en_corpus if w.isalpha()]
    wordset = set(words)
    by_letter: dict[str, list[str]] = {}
    for w in words:
        by_letter.setdefault(w[0], []).append(w)
    entries: list[dict] = []
    # compound joins: w = a + b with both halves real words
    for w in words:
        if len(w) < 6:
            continue
        for cut in range(3, len(w) - 2):
            a, b = w[:cut], w[cut:]
            if a in wordset and b in wordset:
                entries.append({"question": EN_JOIN_TEMPLATE.format(a=a, b=b), "answer": w,
                                "language": "en"})
                break
    # acrostics: first letters of listed words spell the target
    targets = [w for w in words if 3 <= len(w) <= 6 and all(c in by_letter for c in w)]
    rng.shuffle(targets)
    seen_acrostic = set()
    while len(entries) < 1150:
        w = rng.choice(targets)
        chosen = tuple(rng.choice(by_letter[c]) for c in w)
        if chosen in seen_acrostic:
            continue
        seen_acrostic.add(chosen)
        entries.append({"question": EN_ACROSTIC_TEMPLATE.format(words=", ".join(chosen)),
                        "answer": w, "language": "en"})
    seen_q = set()
    lines = []
    for e in entries:
        if e["question"] in seen_q:
            continue
        seen_q.add(e["question"])
        lines.append(json.dumps(e, ensure_ascii=False))
    write_lines(RES / "riddles_en.jsonl", lines[:1100])


def build_zh_riddles(zh_corpus: list[str],
                     table: dict[str, list[tuple[list[str], int]]]) -> None:
    rng = random.Random("riddles-zh-seed")
    entries: list[dict] = []
    for q, a in ZH_RIDDLES_HAND:
        entries.append({"question": q, "answer": a, "language": "zh"})
    for char, decs in sorted(table.items()):
        parts, flag = decs[0]
        if flag:
            entries.append({"question": ZH_COMBINE_TEMPLATE.format(parts="、".join(parts)),
                            "answer": char, "language": "zh"})
        if len(parts) == 2:
            entries.append({"question": ZH_REMOVE_TEMPLATE.format(char=char, part=parts[0]),
                            "answer": parts[1], "language": "zh"})
    while len(entries) < 1100:
        text = "".join(rng.choice(zh_corpus) for _ in range(rng.randint(3, 5)))
        tmpl = rng.choice(ZH_POSITION_TEMPLATES)
        answer = text[0] if "第一" in tmpl else text[-1]
        entries.append({"question": tmpl.format(text=text), "answer": answer, "language": "zh"})
    seen_q = set()
    lines = []
    for e in entries:
        if e["question"] in seen_q:
            continue
        seen_q.add(e["question"])
        lines.append(json.dumps(e, ensure_ascii=False))
    write_lines(RES / "riddles_zh.jsonl", lines[:1100])


def build_inventory() -> None:
    rows = [
        ("symbol", DOT_ASCII_SYMBOLS + DOT_FULLWIDTH),
        ("digit", "1234567890"),
        ("latin", "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"),
        ("greek", DOT_GREEK),
        ("kana", DOT_KANA),
        ("hanzi", ZH_CHARS),
        ("hangul", DOT_HANGUL),
    ]
    total = sum(len(dict.fromkeys(chars)) for _, chars in rows)
    lines = [f"{cat}\t{''.join(dict.fromkeys(chars))}" for cat, chars in rows]
    write_lines(RES / "dot_inventory.tsv", lines, f"category<TAB>characters ({total} total)")
    if total != 976:
        raise SystemExit(f"inventory must hold 976 characters, got {total}")


def main() -> None:
    en, zh, ko = build_corpora()
    table = build_component_table()
    build_variant_tables()
    build_topics()
    build_ko_riddles(ko)
    build_en_riddles(en)
    build_zh_riddles(zh, table)
    build_inventory()


if __name__ == "__main__":
    main()

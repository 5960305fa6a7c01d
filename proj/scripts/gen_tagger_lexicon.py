#!/usr/bin/env python3
"""Regenerates data/tagger_lexicon.tsv.

Entry format: word<TAB>tag[ tag...]. The first tag is the default; the
remaining tags license context-rule moves (e.g. NN -> VB after "to").
Explicit entries win over generated inflections.

Run from the repository root:  python3 scripts/gen_tagger_lexicon.py
"""

VOWELS = "aeiou"

# ---------------------------------------------------------------------------
# Closed-class and hand-disambiguated entries (highest priority).
# ---------------------------------------------------------------------------
EXPLICIT = {
    # articles/determiners
    "the": "DT", "a": "DT", "an": "DT",
    "this": "DT", "that": "IN DT WDT", "these": "DT", "those": "DT",
    "each": "DT", "every": "DT", "either": "DT CC", "neither": "DT CC",
    "some": "DT", "any": "DT", "no": "DT", "all": "DT PDT RB",
    "both": "DT CC", "such": "JJ PDT", "another": "DT", "certain": "JJ",
    "several": "JJ", "enough": "JJ RB", "half": "PDT NN",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "us": "PRP",
    "them": "PRP", "her": "PRP$ PRP", "one": "CD PRP NN", "ones": "NNS",
    "myself": "PRP", "yourself": "PRP", "himself": "PRP", "herself": "PRP",
    "itself": "PRP", "ourselves": "PRP", "yourselves": "PRP",
    "themselves": "PRP", "oneself": "PRP",
    "someone": "NN", "somebody": "NN", "something": "NN", "anyone": "NN",
    "anybody": "NN", "anything": "NN", "everyone": "NN", "everybody": "NN",
    "everything": "NN", "nobody": "NN", "nothing": "NN", "none": "NN",
    # possessives
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$",
    "mine": "PRP", "yours": "PRP", "hers": "PRP", "ours": "PRP", "theirs": "PRP",
    # wh-words
    "who": "WP", "whom": "WP", "whose": "WP$", "which": "WDT",
    "what": "WP WDT", "when": "WRB", "where": "WRB", "why": "WRB",
    "how": "WRB", "whatever": "WDT", "whichever": "WDT", "whoever": "WP",
    "whenever": "WRB", "wherever": "WRB",
    # modals and clitics
    "can": "MD NN", "could": "MD", "may": "MD", "might": "MD NN",
    "must": "MD", "shall": "MD", "should": "MD", "will": "MD NN",
    "would": "MD", "ought": "MD", "cannot": "MD",
    "ca": "MD", "wo": "MD", "sha": "MD",
    "'s": "POS VBZ", "'re": "VBP", "'ve": "VBP", "'ll": "MD", "'d": "MD VBD",
    "'m": "VBP", "n't": "RB",
    # be/have/do
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VBP VB", "has": "VBZ", "had": "VBD VBN", "having": "VBG",
    "do": "VBP VB", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
    # prepositions/subordinators
    "of": "IN", "in": "IN RP", "to": "TO", "for": "IN", "on": "IN RP",
    "with": "IN", "at": "IN", "by": "IN", "from": "IN", "as": "IN RB",
    "about": "IN RB", "into": "IN", "through": "IN", "after": "IN",
    "between": "IN", "against": "IN", "during": "IN", "without": "IN",
    "before": "IN RB", "under": "IN", "around": "IN RB", "among": "IN",
    "because": "IN", "although": "IN", "though": "IN RB", "while": "IN",
    "if": "IN", "unless": "IN", "whereas": "IN", "within": "IN",
    "along": "IN", "across": "IN", "behind": "IN", "beyond": "IN",
    "despite": "IN", "toward": "IN", "towards": "IN", "upon": "IN",
    "until": "IN", "till": "IN", "since": "IN", "whether": "IN",
    "than": "IN", "except": "IN", "near": "IN", "beneath": "IN",
    "beside": "IN", "besides": "IN", "amid": "IN", "amidst": "IN",
    "off": "RP IN RB", "onto": "IN", "per": "IN", "via": "IN",
    "unto": "IN", "alongside": "IN", "atop": "IN", "underneath": "IN",
    "regarding": "IN", "versus": "IN", "inside": "IN RB", "outside": "IN RB",
    "like": "IN VB VBP", "unlike": "IN", "throughout": "IN", "amongst": "IN",
    "out": "RP IN RB", "up": "RP IN RB", "down": "RP IN RB", "over": "IN RP RB",
    "past": "IN JJ NN",
    # conjunctions
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "plus": "CC IN",
    "so": "RB IN CC", "yet": "RB CC",
    # existential
    "there": "EX RB",
    # negation and closed-class adverbs
    "not": "RB", "also": "RB", "however": "RB", "thus": "RB",
    "therefore": "RB", "moreover": "RB", "furthermore": "RB",
    "nevertheless": "RB", "nonetheless": "RB", "hence": "RB",
    "meanwhile": "RB", "instead": "RB", "otherwise": "RB", "indeed": "RB",
    "perhaps": "RB", "maybe": "RB", "again": "RB", "already": "RB",
    "always": "RB", "never": "RB", "often": "RB", "sometimes": "RB",
    "usually": "RB", "still": "RB", "almost": "RB", "quite": "RB",
    "rather": "RB", "ever": "RB", "soon": "RB", "else": "RB",
    "away": "RB", "too": "RB", "very": "RB", "just": "RB", "only": "RB",
    "even": "RB", "here": "RB", "now": "RB", "then": "RB", "once": "RB IN",
    "twice": "RB", "together": "RB", "apart": "RB", "forward": "RB",
    "ago": "RB", "abroad": "RB", "anywhere": "RB", "everywhere": "RB",
    "somewhere": "RB", "nowhere": "RB", "well": "RB JJ UH",
    "far": "RB JJ", "further": "RB JJR", "fast": "RB JJ", "hard": "JJ RB",
    "early": "JJ RB", "late": "JJ RB", "long": "JJ RB", "enough": "JJ RB",
    "much": "JJ RB", "many": "JJ", "few": "JJ", "little": "JJ",
    "more": "JJR RBR", "most": "JJS RBS", "less": "JJR RBR", "least": "JJS RBS",
    "better": "JJR RBR", "best": "JJS RBS", "worse": "JJR", "worst": "JJS",
    "own": "JJ", "same": "JJ", "other": "JJ", "others": "NNS",
    "various": "JJ", "overall": "JJ RB", "due": "JJ", "likely": "JJ RB",
    "able": "JJ", "back": "RB NN VB",
    # ordinals and numbers
    "first": "JJ RB", "second": "JJ", "third": "JJ", "fourth": "JJ",
    "fifth": "JJ", "last": "JJ RB", "next": "JJ IN RB",
    "zero": "CD", "two": "CD", "three": "CD", "four": "CD", "five": "CD",
    "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD",
    "eleven": "CD", "twelve": "CD", "twenty": "CD", "thirty": "CD",
    "forty": "CD", "fifty": "CD", "sixty": "CD", "seventy": "CD",
    "eighty": "CD", "ninety": "CD", "hundred": "CD", "thousand": "CD",
    "million": "CD", "billion": "CD", "dozen": "NN",
    # interjections
    "oh": "UH", "yes": "UH RB", "hello": "UH", "please": "UH RB",
    # frequent irregular plurals / mass nouns
    "people": "NNS", "children": "NNS", "men": "NNS", "women": "NNS",
    "feet": "NNS", "teeth": "NNS", "lives": "NNS VBZ", "media": "NNS NN",
    "data": "NNS NN", "criteria": "NNS", "phenomena": "NNS",
    "analyses": "NNS", "crises": "NNS", "theses": "NNS", "hypotheses": "NNS",
    "series": "NN NNS", "species": "NN NNS", "means": "NN NNS VBZ",
    "news": "NN", "mathematics": "NN", "physics": "NN", "politics": "NNS NN",
    "economics": "NN", "ethics": "NNS NN", "statistics": "NNS NN",
    # frequent ambiguous forms worth pinning
    "used": "VBD VBN JJ", "left": "VBD VBN JJ NN", "found": "VBD VBN",
    "said": "VBD VBN", "set": "VB VBN NN VBD VBP", "put": "VB VBD VBN VBP",
    "cut": "VB VBD VBN NN VBP", "read": "VB VBP VBD VBN",
    "living": "VBG JJ NN", "working": "VBG JJ NN", "learning": "NN VBG",
    "testing": "NN VBG", "schooling": "NN", "housing": "NN VBG",
    "opening": "NN VBG JJ", "ending": "NN VBG",
    "meaning": "NN VBG", "feeling": "NN VBG", "beginning": "NN VBG",
    "understanding": "NN VBG", "teaching": "NN VBG", "training": "NN VBG",
    "writing": "NN VBG", "reading": "NN VBG", "building": "NN VBG",
    "meeting": "NN VBG", "funding": "NN VBG", "spending": "NN VBG",
    "finding": "NN VBG", "findings": "NNS", "warming": "NN VBG",
    "increasing": "VBG JJ", "growing": "VBG JJ", "remaining": "VBG JJ",
    "following": "VBG JJ NN", "according": "VBG", "including": "VBG",
    "interesting": "JJ", "leading": "VBG JJ", "existing": "VBG JJ",
    "ongoing": "JJ", "outstanding": "JJ", "underlying": "VBG JJ",
    "concerning": "VBG IN", "regarding": "IN VBG",
    # frequent comparatives (the -er suffix otherwise reads as a noun)
    "higher": "JJR", "lower": "JJR VB RBR", "larger": "JJR", "smaller": "JJR",
    "greater": "JJR", "stronger": "JJR", "weaker": "JJR", "older": "JJR",
    "younger": "JJR", "newer": "JJR", "warmer": "JJR", "colder": "JJR",
    "deeper": "JJR", "wider": "JJR", "broader": "JJR", "longer": "JJR RBR",
    "shorter": "JJR", "faster": "JJR RBR", "slower": "JJR", "easier": "JJR",
    "harder": "JJR RBR", "cheaper": "JJR", "richer": "JJR", "poorer": "JJR",
    "safer": "JJR", "closer": "JJR RBR", "earlier": "JJR RBR",
    "bigger": "JJR", "smarter": "JJR", "cleaner": "JJR", "clearer": "JJR",
    "simpler": "JJR", "heavier": "JJR", "lighter": "JJR", "brighter": "JJR",
    "darker": "JJR", "tougher": "JJR", "stricter": "JJR",
}

# ---------------------------------------------------------------------------
# Irregular verbs: base, past, participle (3sg and -ing generated).
# Forms where past == participle get "VBD VBN".
# ---------------------------------------------------------------------------
IRREGULAR_VERBS = [
    ("arise", "arose", "arisen"), ("bear", "bore", "borne"),
    ("beat", "beat", "beaten"), ("become", "became", "become"),
    ("begin", "began", "begun"), ("bend", "bent", "bent"),
    ("bind", "bound", "bound"), ("bite", "bit", "bitten"),
    ("blow", "blew", "blown"), ("break", "broke", "broken"),
    ("bring", "brought", "brought"), ("build", "built", "built"),
    ("buy", "bought", "bought"), ("catch", "caught", "caught"),
    ("choose", "chose", "chosen"), ("come", "came", "come"),
    ("deal", "dealt", "dealt"), ("dig", "dug", "dug"),
    ("draw", "drew", "drawn"), ("drink", "drank", "drunk"),
    ("drive", "drove", "driven"), ("eat", "ate", "eaten"),
    ("fall", "fell", "fallen"), ("feed", "fed", "fed"),
    ("feel", "felt", "felt"), ("fight", "fought", "fought"),
    ("find", "found", "found"), ("fly", "flew", "flown"),
    ("forget", "forgot", "forgotten"), ("forgive", "forgave", "forgiven"),
    ("freeze", "froze", "frozen"), ("get", "got", "gotten"),
    ("give", "gave", "given"), ("go", "went", "gone"),
    ("grow", "grew", "grown"), ("hang", "hung", "hung"),
    ("hear", "heard", "heard"), ("hide", "hid", "hidden"),
    ("hit", "hit", "hit"), ("hold", "held", "held"),
    ("hurt", "hurt", "hurt"), ("keep", "kept", "kept"),
    ("know", "knew", "known"), ("lay", "laid", "laid"),
    ("lead", "led", "led"), ("leave", "left", "left"),
    ("lend", "lent", "lent"), ("let", "let", "let"),
    ("lie", "lay", "lain"), ("lose", "lost", "lost"),
    ("make", "made", "made"), ("mean", "meant", "meant"),
    ("meet", "met", "met"), ("pay", "paid", "paid"),
    ("prove", "proved", "proven"), ("quit", "quit", "quit"),
    ("raise", "raised", "raised"), ("ride", "rode", "ridden"),
    ("ring", "rang", "rung"), ("rise", "rose", "risen"),
    ("run", "ran", "run"), ("say", "said", "said"),
    ("see", "saw", "seen"), ("seek", "sought", "sought"),
    ("sell", "sold", "sold"), ("send", "sent", "sent"),
    ("shake", "shook", "shaken"), ("shine", "shone", "shone"),
    ("shoot", "shot", "shot"), ("show", "showed", "shown"),
    ("shut", "shut", "shut"), ("sing", "sang", "sung"),
    ("sink", "sank", "sunk"), ("sit", "sat", "sat"),
    ("sleep", "slept", "slept"), ("slide", "slid", "slid"),
    ("speak", "spoke", "spoken"), ("spend", "spent", "spent"),
    ("spread", "spread", "spread"), ("stand", "stood", "stood"),
    ("steal", "stole", "stolen"), ("stick", "stuck", "stuck"),
    ("strike", "struck", "struck"), ("swim", "swam", "swum"),
    ("swing", "swung", "swung"), ("take", "took", "taken"),
    ("teach", "taught", "taught"), ("tell", "told", "told"),
    ("think", "thought", "thought"), ("throw", "threw", "thrown"),
    ("undergo", "underwent", "undergone"),
    ("understand", "understood", "understood"),
    ("wake", "woke", "woken"), ("wear", "wore", "worn"),
    ("win", "won", "won"), ("write", "wrote", "written"),
]
IRREGULAR_BASE_DEFAULT_VBP = True

# ---------------------------------------------------------------------------
# Regular verbs, verb-primary (default VB/VBP for the base form).
# ---------------------------------------------------------------------------
VERBS = """
accept achieve acknowledge acquire adapt add adjust admit adopt advocate
affect agree allow analyze announce appear apply argue arrange arrive ask
assert assess assign assist assume attain attempt attend attract avoid
behave believe belong blame borrow calculate carry cause celebrate
characterize cite claim clarify classify collect combine commit communicate
compare compete complain complete compose concentrate conclude conduct
confirm connect consider consist constitute construct consume contain
continue contribute convert convey convince cooperate cope correspond
create criticize cultivate dance decide declare decline decrease dedicate
defend define deliver demand demonstrate deny depend derive describe
deserve destroy determine develop differ diminish disagree disappear
discover discuss dissolve distinguish distribute divide dominate earn
educate elect eliminate embrace emerge emphasize employ enable encounter
encourage endure engage enhance enjoy enrich ensure enter establish
evaluate evolve examine exceed exist expand expect explain explore express
extend facilitate fail fill finish fix follow foster gather generate govern
grant guarantee happen hire identify ignore illustrate imagine implement
imply impose improve include incorporate indicate inform inherit initiate
inspire install insist integrate intend interact interpret introduce invest
investigate invite involve justify kill lack learn lift listen locate
maintain manage manifest matter mention migrate miss motivate navigate
neglect notice nurture obey obtain occupy occur operate oppose organize
overcome owe participate perceive perform permit persist persuade portray
possess predict prefer prepare present preserve prevent proceed produce
promote propose protect provide publish pursue realize receive recognize
recommend recover reduce refer reflect refuse register regulate reinforce
reject relate release rely remain remember remove render repeat replace
represent require rescue resolve respond restore retain return reveal
revise satisfy save seem select serve settle solve specify stem strengthen
struggle submit succeed suffer suggest supply surround survive sustain
tend thank threaten transform translate travel treat try undermine
underscore unite vary wait want warn weaken widen wonder
""".split()

# Regular verbs, noun-primary (default NN; VB/VBP as alternates so the
# context rules can recover verbal uses).
NOUN_VERBS = """
access act address aim answer approach balance base benefit boost call
care challenge change charge check claim comment concern control cook copy
cost cover damage date debate demand design desire display doubt dress
drop ease effect end exercise experience face fear feature focus force
form frame function gain guide handle harm head help hope impact influence
increase interest issue judge jump label land last launch limit link list
live look love mark master measure mind mix move name need note object
offer open order paint pass pick plan play point pose practice press print
process pull purchase push question race raise range reach record regard
report request research respect rest result review reward risk rule
schedule score search sense shape share shift signal smile sort sound
start state stay stop store stress stretch study support switch talk
target test touch trace track trade train transfer trust turn use value
view visit vote walk wash watch welcome wish work worry
""".split()

# ---------------------------------------------------------------------------
# Nouns (auto-pluralized unless listed in EXPLICIT).
# ---------------------------------------------------------------------------
NOUNS = """
ability absence abuse academy accident account achievement activity actor
adult advance advantage adversity advice age agency agenda agreement
agriculture air alternative amount animal anxiety apartment application
approval architecture area argument army arrival art article artist aspect
assessment asset assignment assistance association assumption atmosphere
attention attitude audience author authority autonomy average award
awareness baby background bank barrier basis battle beauty bed behavior
being belief bias bill biology bird birth board boat body book border
bottle bottom boundary box boy brain branch bread bridge brother budget
bus business camp campaign campus cancer candidate capacity capital car
carbon card career case cash category cause celebration cell center
century ceremony chain chair chance chapter character charity chemistry
chief child childhood china choice church circle circumstance citizen city
civilization class classroom client climate clothing club coal coast code
coffee college color commitment committee commodity communication
community company comparison competition complexity component computer
concept conclusion condition conference confidence conflict connection
consciousness consensus consequence conservation constitution consumer
consumption contact content contest context contract contrast
contribution conversation cooperation corner corporation corruption
counselor country countryside county couple course court cousin creation
creativity crime crisis criterion critic criticism crop crowd culture cup
curiosity currency curriculum custom customer cycle dam danger daughter
day deal death decade decision defense deficit definition degree
democracy density department depression depth description desert
destination destruction detail device dialogue diet difference difficulty
dignity dilemma dimension dinner direction director disaster discipline
discovery discrimination disease dispute distance distribution district
diversity doctor document dog dollar domain door dream drink driver drug
duration duty dynamic earth economy edge editor efficiency effort egg
election electricity element emergency emission emotion emphasis empire
employee employer employment energy engine engineer engineering enterprise
enthusiasm environment episode equality equipment era error essay estate
ethic evening event evidence evolution example exception excitement
existence expansion expectation expense expert explanation exposure
expression extent eye facility factor factory faculty failure fairness
faith family farm farmer fashion father fault favor fear feedback field
figure film finance fire firm fish flexibility flight floor flow flower
food foot forest fortune foundation framework freedom frequency friend
friendship fruit fuel fund future game gap garden gas gender gene
generation genre gentleman geography girl glass goal good goods
governance government grade graduate grammar grandmother grant graph
grass ground group growth guest guidance guideline guy habit habitat hair
hand happiness harmony head health heart heat height heritage hero
hierarchy highway hill historian history home homework honesty honor
horizon horse hospital host hotel hour house household human humanity
humor husband hypothesis ice idea ideal identity ideology image
imagination immigrant immigration implementation implication importance
incentive incident income independence individual industry inequality
infant inflation information infrastructure ingredient initiative
innovation input insight inspiration instance institution instruction
instructor instrument insurance integration integrity intelligence
intention interaction internet interpretation intervention interview
introduction investment investor island item job journal journalist
journey joy judgment justice kid kind king kingdom kitchen knowledge lab
labor laboratory lack lady lake landscape language law lawyer layer leader
leadership lecture leg legacy legislation leisure length lesson letter
level liberty library license life light line literacy literature
location logic loss lot luck lunch machine magazine majority man
management manager manner manufacturing map margin market marriage
material mathematics matter meal mechanism medicine member membership
memory message metal method methodology middle migration milk mind
minister minority minute mission mistake mode model moment money month
mood morning mother motion motivation mountain mouth movement movie
multitude muscle museum music musician mystery myth narrative nation
nature necessity neighbor neighborhood network night noise norm north
notion novel number nurse nutrition obesity observation obstacle occasion
occupation ocean office officer official oil opinion opponent opportunity
opposition option organism organization origin outcome output oven
overview owner ownership oxygen pace package page pain painting pair
panel paper paradigm paragraph parent park part participant participation
partner partnership party passage passion path patience patient pattern
peace peak peer penalty people percentage perception performance period
permission person personality perspective phase philosophy phone
photograph phrase picture piece pipeline place plane planet plant plastic
plate platform player pleasure plot poem poet poetry police policy
pollution pool population portion position possibility poverty power
prejudice presence president pressure prestige price pride principle
priority prison privacy privilege prize probability problem procedure
product production profession professional professor profit program
progress project promise promotion proof property proportion proposal
prosperity protection protein protest province psychology public
punishment pupil purpose quality quantity quarter queen quest
race rain rate ratio reader reality reason recipe recognition
recommendation reform refugee region relation relationship relevance
reliability religion report reputation requirement resident resilience
resistance resolution resource response responsibility restaurant
restriction retirement revenue review revolution rhythm rice right rise
risk river road rock role roof room root route routine row rule safety
salary sample sanction satisfaction scale scenario scene schedule scheme
scholar scholarship school science scientist scope screen sea season seat
sector security segment selection self seminar sense sentence sequence
servant service session setting sex shadow shape sheet shelter ship shop
shortage side sight sign significance silence similarity singer sister
site situation size skill skin sky sleep smartphone smoke snow
society software soil soldier solution son song soul sound source south
space speaker specialist spectrum speech speed spending spirit sport
spouse spring square stability stadium staff stage stake stakeholder
standard star statement station statistic status stock stone story
stranger strategy stream street strength structure struggle student
studio style subject substance suburb success summary summer sun supply
surface surgery surplus survey survival symbol sympathy symptom system
table talent task taste tax teacher team technique technology teenager
telephone television temperature template tendency tension term
territory text textbook theater theme theory therapy thing thought threat
time tip tissue title tone tool top topic tour tourism tourist town
tradition traffic tragedy trail transaction transition transportation
treatment tree trend trial tribe trip troop trouble truck trust truth
tuition type uncertainty understanding unemployment uniform union unit
unity universe university urgency usage user vacation validity variation
variety vegetable vehicle version victim victory video village violence
vision voice volume volunteer voter wage war waste water wave way wealth
weapon weather web website week weekend weight welfare west wheel wife
wind window winter wisdom woman wood word world writer year youth zone
""".split()

# ---------------------------------------------------------------------------
# Adjectives.
# ---------------------------------------------------------------------------
ADJECTIVES = """
able absolute abstract academic acceptable accessible accurate active
actual acute additional adequate administrative advanced affordable
afraid aggressive agricultural alive ambitious ancient angry annual
anonymous apparent appropriate artificial asleep attractive automatic
available average aware bad basic beautiful big bitter black blind blue
bold brief bright broad brown busy calm capable careful casual central
cheap chemical chief civic civil classical clean clear clever clinical
cold collective colonial colorful comfortable commercial common
comparable competitive complex comprehensive compulsory concrete
confident conscious conservative considerable consistent constant
constitutional contemporary content continuous controversial convenient
conventional core corporate correct costly crazy creative critical
crucial cultural curious current daily dangerous dark dead deep
deliberate democratic dense dependent desirable desperate detailed
different difficult digital direct dirty distinct distinctive diverse
divine domestic dominant double dramatic dry dual dynamic eager easy
ecological economic educational effective efficient elderly electric
electrical electronic elegant elementary emotional empirical empty
endless enormous entire environmental equal equivalent essential ethical
ethnic everyday evident exact excellent exceptional excessive excited
exciting expensive experimental explicit express external extra
extraordinary extreme fair false familiar famous fantastic fat favorable
favorite federal female final financial fine firm fiscal fit flat
flexible fluid folk fond foreign formal formidable fortunate fragile
free frequent fresh friendly full fun functional fundamental funny
general generous genetic gentle genuine geographic geographical giant
glad global golden good gradual grand grateful gray great green gross
happy harsh healthy heavy helpful hidden high historic historical holy
homeless honest horrible hot huge human humble hungry ideal identical
ideological ill illegal immediate immense imperial implicit important
impossible impressive inadequate inclusive incredible independent
indigenous indirect individual industrial inevitable influential
informal inherent initial inner innocent innovative intact integral
intellectual intelligent intense interactive interior internal
international intimate invisible isolated joint judicial junior keen
key kind large lasting latter lazy legal legislative legitimate liberal
light limited linear linguistic liquid literary live lively local logical
lonely loose loud low loyal lucky mad main male manual marginal marine
married massive material mature maximum mean meaningful mechanical
medical medieval mental middle mild military minimal minimum minor mixed
mobile moderate modern modest monthly moral mutual mysterious narrow
national native natural nearby neat necessary negative nervous net
neutral new nice noble normal notable novel nuclear numerous objective
obvious odd official okay old online only open optimistic oral orange
ordinary organic original outdoor outer overseas painful pale parallel
partial particular passionate passive patient peaceful perfect permanent
persistent personal philosophical physical pink plain pleasant poetic
polite political poor popular portable positive possible potential
powerful practical precious precise predictable pregnant preliminary
premium prepared presidential previous primary prime principal prior
pristine private probable productive professional profitable profound
progressive prominent proper proud provincial psychological public pure
purple qualitative quantitative quick quiet racial radical random rapid
rare rational raw ready real realistic reasonable recent red regional
regular relative relevant reliable religious remarkable remote
renewable representative residential resilient respective responsible
retail rich rigid rigorous ripe robust romantic rough round routine
royal rural sacred sad safe scarce scientific secondary secret secular
secure select selective senior sensible sensitive separate serious severe
sharp short sick significant silent silver similar simple single skilled
slight slow small smart smooth social soft solar solid sophisticated
sound southern spare spatial special specific spiritual stable standard
static steady steep straight strange strategic strict striking strong
structural stupid subjective substantial subtle successful sufficient
suitable sunny superb superior supportive supreme sure surprising
sustainable sweet symbolic systematic tall technical technological
temporary terrible theoretical thick thin thirsty thorough tight tiny
tired top total tough toxic traditional tragic transparent tremendous
tropical true typical ultimate unable uncertain uncomfortable undermined
unemployed unexpected unfair unique universal unlikely unprecedented
unusual upper upset urban urgent useful useless usual vague valid
valuable vast verbal viable vibrant virtual visible visual vital vivid
vulnerable warm weak wealthy weekly weird welcome western wet white whole
wide wild willing wise wonderful wooden worldwide worth worthy wrong
yellow young online convincing compelling promising challenging rewarding
demanding encouraging overwhelming misleading balanced experienced
educated qualified complicated dedicated motivated informed organized
structured integrated established
""".split()

# Non -ly adverbs beyond the closed-class set.
ADVERBS = "today tomorrow yesterday tonight overnight sometime anymore anyway somewhat somehow nowadays alike aloud altogether".split()


def double_final(base):
    doubling = {
        "stop", "plan", "drop", "refer", "prefer", "occur", "admit",
        "commit", "permit", "submit", "regret", "control", "equip",
        "grab", "ban", "rob", "shop", "slip", "step", "trap", "wrap",
        "chat", "drag", "hug", "jog", "nod", "pat", "pin", "rub",
        "scan", "skip", "spot", "stir", "swap", "tap",
    }
    return base in doubling


def verb_forms(base):
    """(3sg, past, ing) with basic orthography."""
    if base.endswith(("s", "sh", "ch", "x", "z", "o")):
        third = base + "es"
    elif base.endswith("y") and base[-2] not in VOWELS:
        third = base[:-1] + "ies"
    else:
        third = base + "s"
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        past = base + "d"
        ing = base[:-1] + "ing"
    elif base.endswith("y") and base[-2] not in VOWELS:
        past = base[:-1] + "ied"
        ing = base + "ing"
    elif double_final(base):
        past = base + base[-1] + "ed"
        ing = base + base[-1] + "ing"
    else:
        past = base + "ed"
        ing = base + "ing"
    return third, past, ing


def plural(noun):
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith("fe"):
        return noun[:-2] + "ves"
    if noun.endswith("f") and not noun.endswith(("ff", "of", "ef")):
        return noun[:-1] + "ves"
    return noun + "s"


def main():
    entries = {}

    def add(word, tags):
        if word not in entries:
            entries[word] = tags

    # generated nouns first collected separately; explicit wins at the end
    for base, past, part in IRREGULAR_VERBS:
        third, _, ing = verb_forms(base)
        if part == base and past == base:
            add(base, "VBP VB VBD VBN") # "hit", "hurt", "let"
        elif part == base:
            add(base, "VBP VB VBN") # "has become", "have come"
        else:
            add(base, "VBP VB" if IRREGULAR_BASE_DEFAULT_VBP else "VB VBP")
        add(third, "VBZ")
        if past == part:
            add(past, "VBD VBN")
        else:
            add(past, "VBD")
            add(part, "VBN")
        add(ing, "VBG")

    for base in VERBS:
        third, past, ing = verb_forms(base)
        add(base, "VBP VB")
        add(third, "VBZ")
        add(past, "VBD VBN")
        add(ing, "VBG")

    for base in NOUN_VERBS:
        third, past, ing = verb_forms(base)
        add(base, "NN VB VBP")
        add(third, "NNS VBZ")
        add(past, "VBD VBN")
        add(ing, "VBG NN")

    for noun in NOUNS:
        add(noun, "NN")
        add(plural(noun), "NNS")

    for adj in ADJECTIVES:
        add(adj, "JJ")

    for adv in ADVERBS:
        add(adv, "RB")

    entries.update(EXPLICIT)

    with open("data/tagger_lexicon.tsv", "w") as f:
        f.write("# word<TAB>default-tag[ alternate-tags...]\n")
        for word in sorted(entries):
            f.write(f"{word}\t{entries[word]}\n")
    print(f"{len(entries)} lexicon entries")


if __name__ == "__main__":
    main()

#pragma once

// Generated by tools/embed_resources.py from resources/. Do not edit.

#include <string_view>

namespace veritag::resources {

inline constexpr std::string_view stopwords = R"veritag(# English stopwords, one per line
i
me
my
myself
we
our
ours
ourselves
you
you're
you've
you'll
you'd
your
yours
yourself
yourselves
he
him
his
himself
she
she's
her
hers
herself
it
it's
its
itself
they
them
their
theirs
themselves
what
which
who
whom
this
that
that'll
these
those
am
is
are
was
were
be
been
being
have
has
had
having
do
does
did
doing
a
an
the
and
but
if
or
because
as
until
while
of
at
by
for
with
about
against
between
into
through
during
before
after
above
below
to
from
up
down
in
out
on
off
over
under
again
further
then
once
here
there
when
where
why
how
all
any
both
each
few
more
most
other
some
such
no
nor
not
only
own
same
so
than
too
very
s
t
can
will
just
don
don't
should
should've
now
d
ll
m
o
re
ve
y
ain
aren
aren't
couldn
couldn't
didn
didn't
doesn
doesn't
hadn
hadn't
hasn
hasn't
haven
haven't
isn
isn't
ma
mightn
mightn't
mustn
mustn't
needn
needn't
shan
shan't
shouldn
shouldn't
wasn
wasn't
weren
weren't
won
won't
wouldn
wouldn't
)veritag";

inline constexpr std::string_view easy_words = R"veritag(# Common words treated as easy; tokens outside this list count as difficult
a
able
about
above
across
act
add
afraid
after
afternoon
again
against
age
ago
agree
air
all
almost
alone
along
already
also
always
am
among
an
and
angry
animal
another
answer
any
anyone
anything
apple
are
arm
around
art
as
ask
at
away
baby
back
bad
bag
ball
bank
bar
bat
be
bear
beat
beautiful
because
bed
been
before
began
begin
behind
being
believe
bell
below
best
better
between
big
bird
bit
black
blood
blow
blue
board
boat
body
bone
book
born
both
bottom
bought
box
boy
bread
break
bring
broke
brother
brought
brown
build
built
burn
bus
busy
but
buy
by
cake
call
came
can
car
card
care
carry
case
cat
catch
cause
cent
chair
change
child
children
city
class
clean
clear
close
cloth
coat
cold
color
come
cook
cool
corn
could
count
country
course
cover
cow
cry
cup
cut
dad
dance
dark
day
dead
dear
deep
did
die
different
dinner
do
doctor
does
dog
done
door
down
draw
dream
dress
drink
drive
drop
dry
during
each
ear
early
earth
easy
eat
egg
eight
end
enough
even
evening
ever
every
eye
face
fact
fair
fall
family
far
farm
fast
father
feel
feet
fell
felt
few
field
fight
fill
find
fine
fire
first
fish
five
floor
fly
follow
food
foot
for
found
four
free
friend
from
front
fruit
full
fun
game
garden
gave
get
girl
give
glad
go
god
going
gold
gone
good
got
grass
great
green
grew
ground
group
grow
had
hair
half
hall
hand
happy
hard
has
hat
have
he
head
hear
heard
heart
held
help
her
here
high
hill
him
his
hit
hold
hole
home
hope
horse
hot
hour
house
how
hundred
hurt
i
ice
idea
if
in
inside
into
is
it
its
job
jump
just
keep
kept
kid
kill
kind
king
knew
know
lady
land
large
last
late
laugh
law
lay
lead
learn
least
leave
left
leg
less
let
letter
life
light
like
line
lion
list
little
live
long
look
lost
lot
love
low
made
make
man
many
may
me
mean
meet
men
met
might
mile
milk
mind
miss
money
month
moon
more
morning
most
mother
move
much
must
my
name
near
need
never
new
news
next
nice
night
nine
no
noise
north
not
nothing
now
number
of
off
often
oh
old
on
once
one
only
open
or
other
our
out
over
own
page
paper
part
party
pass
past
pay
people
pick
picture
piece
place
plan
play
please
point
poor
power
pretty
pull
put
queen
question
quick
quiet
rain
ran
read
ready
real
red
remember
rest
ride
right
ring
river
road
rock
room
round
run
said
same
sat
saw
say
school
sea
seat
second
see
seem
seen
sell
send
sent
seven
shall
she
ship
shoe
shop
short
should
show
sick
side
sing
sister
sit
six
sky
sleep
slept
small
smile
snow
so
some
something
son
song
soon
sound
south
speak
stand
star
start
state
stay
step
still
stop
store
story
street
strong
such
summer
sun
sure
table
take
talk
tall
teacher
tell
ten
than
thank
that
the
their
them
then
there
these
they
thing
think
this
those
though
thought
three
through
time
to
today
together
told
too
took
top
town
tree
true
try
turn
two
under
until
up
upon
us
use
very
visit
voice
wait
walk
wall
want
war
warm
was
wash
watch
water
way
we
wear
week
well
went
were
west
what
when
where
which
while
white
who
whole
why
wide
wife
will
win
wind
window
winter
wish
with
without
woman
women
wood
word
work
world
would
write
wrong
yard
year
yellow
yes
yet
you
young
your
)veritag";

inline constexpr std::string_view abbreviations = R"veritag(# Tokens that do not end a sentence when followed by a period (lowercase)
mr
mrs
ms
dr
prof
sr
jr
st
mt
ft
vs
etc
inc
ltd
co
corp
dept
gov
govt
sen
rep
gen
col
lt
sgt
capt
cmdr
adm
maj
pres
rev
hon
jan
feb
mar
apr
jun
jul
aug
sep
sept
oct
nov
dec
vol
pp
fig
approx
ave
blvd
rd
al
)veritag";

inline constexpr std::string_view ad_domains = R"veritag(# Registrable domains of advertising networks; subdomains match too
doubleclick.net
googlesyndication.com
googleadservices.com
googletagservices.com
adnxs.com
taboola.com
outbrain.com
criteo.com
criteo.net
amazon-adsystem.com
adsafeprotected.com
moatads.com
pubmatic.com
rubiconproject.com
openx.net
revcontent.com
mgid.com
media.net
zergnet.com
adroll.com
advertising.com
casalemedia.com
sharethrough.com
yieldmo.com
)veritag";

inline constexpr std::string_view demo_dictionary = R"veritag(%
1	FW.pronoun
2	FW.article
3	AF.posemo
4	AF.anger
5	AF.sad
6	AF.anx
7	SO.family
8	SO.friend
9	CP.cause
10	CP.certain
11	PP.see
12	BP.ingest
13	BP.health
14	DR.power
15	DR.risk
16	TR.focuspast
17	RL.space
18	RL.time
19	PC.home
20	PC.money
21	PC.work
22	IL.swear
23	OG.quant
24	OG.interrog
%
i	1
me	1
my	1
mine	1
myself	1
we	1
us	1
our	1
ours	1
you	1
your	1
yours	1
he	1
him	1
his	1
she	1
her	1
hers	1
they	1
them	1
their	1
theirs	1
it	1
its	1
itself	1
a	2
an	2
the	2
happ*	3
love*	3
lovely	3
good	3
great	3
nice	3
win*	3
won	3
glad	3
joy*	3
hope*	3
best	3
wonderful	3
excellent	3
proud*	3
success*	3
benefit*	3
peace*	3
care*	3
support*	3
praise*	3
trust*	3
brave*	3
fun	3
hate*	4
angry	4
anger*	4
outrage*	4
furious	4
rage*	4
attack*	4
fight*	4
kill*	4
destroy*	4
hostil*	4
violen*	4
threat*	4	15
enem*	4
blame*	4
disgust*	4
slam*	4
war	4
sad*	5
cry*	5
cried	5
grief*	5
griev*	5
tragic*	5
tragedy	5
lonel*	5
loss*	5
lost	5
hurt*	5
mourn*	5
sorrow*	5
miss*	5
depress*	5
afraid	6
fear*	6
worr*	6
anxi*	6
nervous*	6
panic*	6
scare*	6
scary	6
terrif*	6
shock*	6
alarm*	6
uneas*	6
crisis	6
family	7
famil*	7	19
mother*	7
father*	7
mom	7
dad	7
son*	7
daughter*	7
brother*	7
sister*	7
wife	7
wives	7
husband*	7
parent*	7
child*	7
kid*	7
baby	7
friend*	8
buddy	8
buddies	8
pal	8
ally	8
allies	8
companion*	8
neighbor*	8
partner*	8
because	9
cause*	9
effect*	9
hence	9
therefore	9
thus	9
reason*	9
result*	9
lead*	9
depend*	9
since	9
origin*	9
always	10
never	10
certain*	10
definite*	10
absolute*	10
clear*	10
obvious*	10
truth*	10
true	10
fact*	10
must	10
sure	10
undeniabl*	10
proof	10
see	11
saw	11
seen	11
look*	11
watch*	11
view*	11
show*	11
sight*	11
eye*	11
visib*	11
image*	11
picture*	11
video*	11
eat*	12
ate	12
food*	12
drink*	12
meal*	12
dinner*	12
lunch*	12
breakfast*	12
hungry	12
feed*	12
coffee	12
wine	12
beer	12
health*	13
sick*	13
ill	13
illness*	13
disease*	13
doctor*	13
hospital*	13
medic*	13
pain*	13
virus*	13
vaccin*	13
cancer*	13
patient*	13
power*	14
leader*	14
control*	14
boss*	14	21
authorit*	14
govern*	14
presiden*	14
king*	14
elite*	14
command*	14
rule*	14
dominat*	14
officer*	14
senat*	14
congress*	14
risk*	15
danger*	15
safe*	15
secur*	15
protect*	15
warn*	15
caution*	15
was	16
were	16
had	16
did	16
said	16
told	16
went	16
ago	16
yesterday	16	18
previous*	16
former*	16
earlier	16
used	16
up	17
down	17
in	17
out	17
above	17
below	17
near	17
far	17
inside	17
outside	17
around	17
here	17
there	17
where	17	24
place*	17
area*	17
north	17
south	17
east	17
west	17
time*	18
when	18	24
then	18
now	18
today	18
tomorrow	18
soon	18
later	18
year*	18
month*	18
week*	18
day*	18
hour*	18
minute*	18
early	18
late	18
recent*	18
until	18
home*	19
house*	19
apartment*	19
kitchen*	19
bedroom*	19
garden*	19
yard*	19
money	20
cash	20
dollar*	20
pay*	20
paid	20
tax*	20
cost*	20
price*	20
bank*	20
budget*	20
fund*	20
spend*	20
economy	20
econom*	20
rich	20
wealth*	20
debt*	20
work*	21
job*	21
employ*	21
office*	21
career*	21
business*	21
company	21
compan*	21
hire*	21
salary	21
salaries	21
project*	21
staff*	21
damn	22
hell	22
crap	22
suck*	22
stupid	22
idiot*	22
shit*	22
fuck*	22
bastard*	22
all	23
any	23
each	23
every	23
few	23
many	23
more	23
most	23
much	23
some	23
several	23
none	23
less	23
least	23
lot	23
lots	23
half	23
how	24
what	24
which	24
who	24
whom	24
whose	24
why	24
)veritag";

inline constexpr std::string_view tag_groups = R"veritag({
  "BT": ["html", "body", "title", "h1", "h2", "h3", "h4", "h5", "h6", "p", "br", "hr"],
  "FT": ["b", "i", "u", "em", "strong", "small", "sub", "sup", "mark", "del", "ins", "abbr", "acronym", "blockquote", "cite", "code", "pre", "q", "s"],
  "FIT": ["form", "input", "textarea", "button", "select", "option", "optgroup", "label", "fieldset", "legend", "datalist", "output"],
  "FRT": ["frame", "frameset", "noframes", "iframe"],
  "IT": ["img", "map", "area", "canvas", "figure", "figcaption", "picture", "svg"],
  "AVT": ["audio", "video", "source", "track", "embed"],
  "LKT": ["a", "nav", "link"],
  "LT": ["ul", "ol", "li", "dl", "dt", "dd"],
  "TT": ["table", "caption", "th", "tr", "td", "thead", "tbody", "tfoot", "col", "colgroup"],
  "ST": ["article", "section", "aside", "header", "footer", "main", "details", "summary", "dialog"],
  "MT": ["head", "meta", "base", "style"],
  "PT": ["script", "noscript", "object", "param"]
}
)veritag";

}  // namespace veritag::resources

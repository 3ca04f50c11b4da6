// Copyright 2026 The Guardgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexicon.h"

#include <map>

namespace guardgate::evalkit::lexicon {

const NameLexicon& Names() {
  static const NameLexicon names = {
      {"Иванов",   "Смирнов",  "Кузнецов", "Попов",     "Соколов",
       "Лебедев",  "Новиков",  "Морозов",  "Волков",    "Зайцев",
       "Павлов",   "Семенов",  "Голубев",  "Виноградов", "Богданов",
       "Воробьев", "Федоров",  "Михайлов", "Беляев",    "Тарасов",
       "Белов",    "Комаров",  "Орлов",    "Киселев",   "Макаров",
       "Андреев",  "Ковалев",  "Ильин",    "Гусев",     "Титов",
       "Кузьмин",  "Баранов",  "Куликов",  "Алексеев",  "Степанов"},
      {{{"Иван", "Ивана", "Ивану"}},
       {{"Сергей", "Сергея", "Сергею"}},
       {{"Алексей", "Алексея", "Алексею"}},
       {{"Дмитрий", "Дмитрия", "Дмитрию"}},
       {{"Андрей", "Андрея", "Андрею"}},
       {{"Михаил", "Михаила", "Михаилу"}},
       {{"Николай", "Николая", "Николаю"}},
       {{"Павел", "Павла", "Павлу"}},
       {{"Артём", "Артёма", "Артёму"}},
       {{"Олег", "Олега", "Олегу"}},
       {{"Владимир", "Владимира", "Владимиру"}},
       {{"Евгений", "Евгения", "Евгению"}},
       {{"Игорь", "Игоря", "Игорю"}},
       {{"Константин", "Константина", "Константину"}},
       {{"Роман", "Романа", "Роману"}},
       {{"Григорий", "Григория", "Григорию"}}},
      {{{"Анна", "Анны", "Анне"}},
       {{"Мария", "Марии", "Марии"}},
       {{"Елена", "Елены", "Елене"}},
       {{"Ольга", "Ольги", "Ольге"}},
       {{"Наталья", "Натальи", "Наталье"}},
       {{"Татьяна", "Татьяны", "Татьяне"}},
       {{"Екатерина", "Екатерины", "Екатерине"}},
       {{"Ирина", "Ирины", "Ирине"}},
       {{"Светлана", "Светланы", "Светлане"}},
       {{"Юлия", "Юлии", "Юлии"}},
       {{"Дарья", "Дарьи", "Дарье"}},
       {{"Ксения", "Ксении", "Ксении"}},
       {{"Вера", "Веры", "Вере"}},
       {{"Полина", "Полины", "Полине"}}},
      {"Иванов", "Сергеев", "Петров", "Александров", "Николаев", "Андреев",
       "Михайлов", "Владимиров", "Дмитриев", "Олегов", "Павлов", "Романов",
       "Игорев", "Викторов", "Юрьев"},
  };
  return names;
}

const AddressLexicon& Addresses() {
  static const AddressLexicon addresses = {
      {"Москва", "Санкт-Петербург", "Казань", "Новосибирск", "Екатеринбург",
       "Нижний Новгород", "Самара", "Омск", "Ростов-на-Дону", "Уфа",
       "Красноярск", "Воронеж", "Пермь", "Волгоград", "Тюмень", "Краснодар",
       "Ярославль", "Иркутск", "Томск", "Калининград"},
      {"Московская обл.", "Ленинградская обл.", "Свердловская обл.",
       "Новосибирская обл.", "Самарская обл.", "Тюменская обл.",
       "Ростовская обл.", "Воронежская обл."},
      {"Ленина", "Пушкина", "Гагарина", "Советская", "Мира", "Садовая",
       "Лесная", "Набережная", "Центральная", "Молодёжная", "Школьная",
       "Новая", "Октябрьская", "Кирова", "Чехова", "Тверская", "Профсоюзная",
       "Строителей", "Победы", "Заводская", "Луговая", "Вокзальная"},
      {"ул.", "пр-т", "пер.", "ш.", "бул.", "улица"},
  };
  return addresses;
}

const std::vector<std::string>& Logins() {
  static const std::vector<std::string> logins = {
      "ivan.petrov",  "a.smirnova",  "kuznetsov.d", "olga_popova",
      "m.sokolov",    "lebedeva.e",  "novikov88",   "natali.morozova",
      "volkov.pavel", "zaytseva.k",  "sergey.pavlov", "info",
      "support.team", "hr",          "orders",      "d.belov",
      "tarasova.iri", "kiselev.oleg", "makarova.v", "andreev.roman"};
  return logins;
}

const std::vector<std::string>& MailDomains() {
  static const std::vector<std::string> domains = {
      "mail.ru", "yandex.ru", "gmail.com", "bk.ru", "inbox.ru",
      "rambler.ru", "company.ru", "stroy-invest.ru", "list.ru"};
  return domains;
}

const std::vector<Template>& EntityTemplates(const std::string& label) {
  static const std::map<std::string, std::vector<Template>> templates = {
      {"NAME",
       {{"S-BANK", "Здравствуйте, меня зовут {NAME}, хочу уточнить остаток по счёту."},
        {"S-HR", "Резюме кандидата {NAME:gen} передано руководителю отдела."},
        {"S-SUPPORT", "Передайте, пожалуйста, обращение {NAME:dat}, ответ ждут сегодня."},
        {"L-CHAT", "привет, это {NAME}, скинь фотки с выходных"},
        {"S-RE", "Договор аренды подписан со стороны {NAME:gen} вчера вечером."},
        {"S-TELECOM", "Выдайте новую сим-карту {NAME:dat} по доверенности."},
        {"L-DIALOG", "Оператор: Как к вам обращаться?\nКлиент: {NAME}."}}},
      {"PHONE_NUMBER",
       {{"S-TELECOM", "Мой номер {PHONE_NUMBER}, на нём пропал интернет."},
        {"S-DELIVERY", "Курьер позвонит по телефону {PHONE_NUMBER} за час до доставки."},
        {"S-AUTO", "Запишите на диагностику, контактный телефон {PHONE_NUMBER}."},
        {"L-CHAT", "набери меня на {PHONE_NUMBER} когда освободишься"},
        {"S-BANK", "Смените номер для уведомлений на {PHONE_NUMBER}, старый больше не работает."},
        {"L-DIALOG", "Оператор: Назовите номер для связи.\nКлиент: {PHONE_NUMBER}"}}},
      {"EMAIL",
       {{"S-SUPPORT", "Ответ на заявку пришлите на {EMAIL}, пожалуйста."},
        {"S-HR", "Резюме можно отправить на адрес {EMAIL} до пятницы."},
        {"L-CHAT", "вот моя почта {EMAIL}, кидай туда"},
        {"S-RE", "Скан договора отправьте на {EMAIL}."},
        {"S-BANK", "Выписку по счёту прошу направить на {EMAIL}."}}},
      {"ADDRESS",
       {{"S-DELIVERY", "Доставьте заказ по адресу: {ADDRESS}."},
        {"S-RE", "Сдаётся двухкомнатная квартира, адрес: {ADDRESS}, без посредников."},
        {"S-AUTO", "Эвакуатор нужен по адресу {ADDRESS}, машина не заводится."},
        {"L-CHAT", "мы переехали, новый адрес {ADDRESS}, заходи в гости"},
        {"S-TELECOM", "Подключите домашний интернет по адресу {ADDRESS}."}}},
      {"BANK_CARD_NUMBER",
       {{"S-BANK", "Заблокируйте карту {BANK_CARD_NUMBER}, я её потерял."},
        {"S-BANK", "Перевод с карты {BANK_CARD_NUMBER} не прошёл, проверьте."},
        {"S-DELIVERY", "Оплатил заказ картой {BANK_CARD_NUMBER}, но деньги не списались."},
        {"L-CHAT", "скинь на карту {BANK_CARD_NUMBER} за билеты"},
        {"S-SUPPORT", "Привяжите к аккаунту карту {BANK_CARD_NUMBER} для автоплатежа."}}},
      {"CVC",
       {{"S-BANK", "На обороте карты указан CVC {CVC}, это нормально?"},
        {"S-SUPPORT", "Форма оплаты не принимает CVV {CVC}, что делать?"},
        {"L-CHAT", "там еще спрашивают cvc, вроде {CVC}"},
        {"S-DELIVERY", "При оплате ввёл код CVC {CVC}, но платёж отклонён."},
        {"S-BANK", "Можно сообщить код {CVC} с обратной стороны карты оператору?"}}},
      {"INN",
       {{"S-HR", "Для оформления укажите ИНН {INN} в анкете сотрудника."},
        {"S-BANK", "ИНН организации {INN}, прошу открыть расчётный счёт."},
        {"S-RE", "Арендатор предоставил ИНН {INN} для договора."},
        {"S-SUPPORT", "В счёте на оплату неверно указан ИНН {INN}, исправьте."},
        {"S-AUTO", "Счёт на ремонт выставьте на ИНН {INN}."}}},
      {"KPP",
       {{"S-BANK", "КПП {KPP}, остальные реквизиты без изменений."},
        {"S-SUPPORT", "В карточке компании указан КПП {KPP}, он актуален."},
        {"S-RE", "Для договора аренды нужен КПП {KPP} арендатора."},
        {"S-AUTO", "Укажите в счёте КПП {KPP} нашего филиала."},
        {"S-HR", "Справку выдайте с КПП {KPP} обособленного подразделения."}}},
      {"OGRN",
       {{"S-BANK", "ОГРН {OGRN}, компания зарегистрирована в Москве."},
        {"S-RE", "Собственник помещения: ООО, ОГРН {OGRN}."},
        {"S-SUPPORT", "Проверьте контрагента по ОГРН {OGRN}."},
        {"S-HR", "Работодатель указал в договоре ОГРН {OGRN}."},
        {"S-DELIVERY", "Поставщик с ОГРН {OGRN} задерживает отгрузку."}}},
      {"OGRNIP",
       {{"S-BANK", "ОГРНИП {OGRNIP}, хочу открыть счёт для ИП."},
        {"S-RE", "Арендатор работает как ИП, ОГРНИП {OGRNIP}."},
        {"S-AUTO", "Оплату проведите на ИП с ОГРНИП {OGRNIP}."},
        {"S-DELIVERY", "Курьерская служба ИП, ОГРНИП {OGRNIP}, работает по договору."},
        {"S-SUPPORT", "В чеке указан ОГРНИП {OGRNIP} продавца."}}},
      {"SNILS",
       {{"S-HR", "СНИЛС сотрудника {SNILS}, внесите в личное дело."},
        {"S-HR", "Для оформления нужен СНИЛС: {SNILS}."},
        {"S-SUPPORT", "Привяжите СНИЛС {SNILS} к учётной записи."},
        {"S-BANK", "Для пенсионной карты укажите СНИЛС {SNILS}."},
        {"L-DIALOG", "Оператор: Назовите СНИЛС.\nКлиент: {SNILS}"}}},
      {"PASSPORT_NUMBER",
       {{"S-TELECOM", "Оформите договор на паспорт {PASSPORT_NUMBER}, выдан в 2015 году."},
        {"S-BANK", "Серия и номер паспорта: {PASSPORT_NUMBER}."},
        {"S-AUTO", "Для договора купли-продажи нужен паспорт {PASSPORT_NUMBER} владельца."},
        {"S-RE", "Паспорт арендатора: {PASSPORT_NUMBER}."},
        {"S-HR", "Копия паспорта {PASSPORT_NUMBER} приложена к анкете."},
        {"L-DIALOG", "Оператор: Продиктуйте данные паспорта.\nКлиент: {PASSPORT_NUMBER}"}}},
      {"TOKEN",
       {{"S-SUPPORT", "Мой API-ключ {TOKEN} перестал работать."},
        {"S-SUPPORT", "Токен доступа: {TOKEN}. Отзовите его, пожалуйста."},
        {"L-CHAT", "держи токен {TOKEN} только никому"},
        {"S-BANK", "Ключ восстановления {TOKEN} сохранил в заметках."},
        {"S-TELECOM", "Для входа в личный кабинет используйте ключ {TOKEN}."}}},
  };
  static const std::vector<Template> empty;
  auto it = templates.find(label);
  return it == templates.end() ? empty : it->second;
}

namespace {

struct DomainTemplates {
  std::vector<std::string> pii;
  std::vector<std::string> clean;
};

const std::map<std::string, DomainTemplates>& AllDomainTemplates() {
  static const std::map<std::string, DomainTemplates> all = {
      {"S-BANK",
       {{"Здравствуйте, я {NAME}. Карта {BANK_CARD_NUMBER} заблокирована, перезвоните на {PHONE_NUMBER}.",
         "Прошу перевыпустить карту {BANK_CARD_NUMBER}, CVC {CVC} мог увидеть посторонний.",
         "Клиент {NAME} просит открыть вклад, ИНН {INN}.",
         "Выписку по счёту отправьте на {EMAIL}, клиент {NAME}.",
         "Юрлицо с ИНН {INN} и КПП {KPP} просит выпустить бизнес-карту.",
         "Для пенсионной карты клиента {NAME:gen} нужен СНИЛС {SNILS}."},
        {"Подскажите, какой лимит на снятие наличных в банкомате?",
         "Как подключить уведомления об операциях в мобильном приложении?",
         "Почему перевод между своими счетами идёт так долго?",
         "Хочу закрыть накопительный счёт и забрать проценты.",
         "Сколько стоит обслуживание кредитной карты в первый год?"}}},
      {"S-TELECOM",
       {{"Номер {PHONE_NUMBER} не принимает звонки, абонент {NAME}.",
         "Переоформите договор на имя {NAME:gen}, паспорт {PASSPORT_NUMBER}.",
         "Подключите интернет по адресу {ADDRESS}, телефон для связи {PHONE_NUMBER}.",
         "Счёт за связь пришлите на {EMAIL}.",
         "Перенесите номер {PHONE_NUMBER} на новый тариф."},
        {"Какой тариф лучше подходит для путешествий по России?",
         "Не работает мобильный интернет уже второй день.",
         "Как отключить платные подписки на номере?",
         "Можно ли сохранить номер при переходе к вам?",
         "Сколько стоит роуминг в Турции?"}}},
      {"S-DELIVERY",
       {{"Доставка на адрес {ADDRESS}, получатель {NAME}, телефон {PHONE_NUMBER}.",
         "Курьер не приехал, заказ для {NAME:gen} по адресу {ADDRESS}.",
         "Измените адрес доставки на {ADDRESS}.",
         "Уведомления о статусе заказа присылайте на {EMAIL}.",
         "Позвоните получателю {NAME:dat} на номер {PHONE_NUMBER} перед приездом."},
        {"Где сейчас находится моя посылка?",
         "Можно ли перенести доставку на выходные?",
         "Курьер опоздал на два часа, это нормально?",
         "Как оформить возврат товара через пункт выдачи?",
         "Сколько дней хранится заказ в постамате?"}}},
      {"S-AUTO",
       {{"Запишите на ТО клиента {NAME:gen}, телефон {PHONE_NUMBER}.",
         "Владелец автомобиля {NAME}, паспорт {PASSPORT_NUMBER}.",
         "Счёт за ремонт выставьте на ИНН {INN}.",
         "Эвакуатор на адрес {ADDRESS}, звонить {NAME:dat} по номеру {PHONE_NUMBER}.",
         "Заказ-наряд отправьте на почту {EMAIL}."},
        {"Сколько стоит замена масла и фильтров?",
         "Стучит подвеска спереди, когда можно приехать?",
         "Есть ли в наличии зимние шины нужного размера?",
         "Какие работы входят в плановое обслуживание?",
         "Можно ли оставить машину на ночь на стоянке сервиса?"}}},
      {"S-HR",
       {{"Кандидат {NAME}, резюме на {EMAIL}, телефон {PHONE_NUMBER}.",
         "Оформите сотрудника {NAME:gen}: СНИЛС {SNILS}, ИНН {INN}.",
         "Паспорт нового сотрудника: {PASSPORT_NUMBER}, СНИЛС {SNILS}.",
         "Направьте оффер {NAME:dat} на почту {EMAIL}.",
         "Справку о доходах для {NAME:gen} подготовьте к пятнице."},
        {"Когда будет следующий набор на стажировку?",
         "Какие документы нужны для оформления отпуска?",
         "Можно ли работать удалённо два дня в неделю?",
         "Как рассчитывается премия по итогам квартала?",
         "Где посмотреть график собеседований?"}}},
      {"S-RE",
       {{"Сдаю квартиру по адресу {ADDRESS}, собственник {NAME}, телефон {PHONE_NUMBER}.",
         "Арендатор {NAME}, паспорт {PASSPORT_NUMBER}, въезд с первого числа.",
         "Покупатель {NAME}, ИНН {INN}, сделка по адресу {ADDRESS}.",
         "Договор аренды отправьте на {EMAIL}.",
         "Офис снимает компания с ОГРН {OGRN}, КПП {KPP}.",
         "Арендатор помещения ИП, ОГРНИП {OGRNIP}."},
        {"Сколько стоит аренда однокомнатной квартиры в центре?",
         "Можно ли заселиться с домашними животными?",
         "Какие документы нужны для ипотеки?",
         "Входят ли коммунальные платежи в стоимость аренды?",
         "Когда можно посмотреть квартиру?"}}},
      {"S-SUPPORT",
       {{"Не могу войти в аккаунт {EMAIL}, токен {TOKEN} не принимается.",
         "Пользователь {NAME} просит сбросить пароль, почта {EMAIL}.",
         "Ключ API {TOKEN} утёк, отзовите его срочно.",
         "Перезвоните мне на {PHONE_NUMBER}, вопрос по подписке.",
         "Организация с ИНН {INN} не может выставить счёт.",
         "Оплата картой {BANK_CARD_NUMBER} не проходит, CVV {CVC} ввожу верно."},
        {"Приложение закрывается сразу после запуска.",
         "Как изменить язык интерфейса?",
         "Не приходит письмо для подтверждения регистрации.",
         "Где найти историю заказов?",
         "Как отменить автопродление подписки?"}}},
      {"L-CHAT",
       {{"привет, это {NAME}, мой новый номер {PHONE_NUMBER}",
         "адрес вечеринки {ADDRESS}, приходи к семи",
         "напиши {NAME:dat}, она ждёт",
         "моя почта {EMAIL}, скинь туда фотки",
         "переведи на карту {BANK_CARD_NUMBER} за пиццу"},
        {"кто идёт сегодня в кино?", "скинь ссылку на тот ролик",
         "я опоздаю минут на двадцать", "ну что, в субботу на дачу едем?",
         "купи хлеба по дороге домой"}}},
      {"L-DIALOG",
       {{"Клиент: Здравствуйте.\nОператор: Добрый день, как вас зовут?\nКлиент: {NAME}.",
         "Оператор: Назовите номер телефона.\nКлиент: {PHONE_NUMBER}\nОператор: Спасибо.",
         "Клиент: Хочу изменить адрес.\nОператор: Какой новый адрес?\nКлиент: {ADDRESS}",
         "Оператор: Куда отправить чек?\nКлиент: На {EMAIL}, пожалуйста.",
         "Клиент: Я {NAME}, мой номер {PHONE_NUMBER}.\nОператор: Нашла вашу заявку."},
        {"Клиент: Добрый день.\nОператор: Здравствуйте, чем могу помочь?",
         "Клиент: Подскажите часы работы.\nОператор: С девяти до восьми.",
         "Оператор: Вопрос решён?\nКлиент: Да, спасибо.",
         "Клиент: Заявка ещё в работе?\nОператор: Да, ответ будет завтра.",
         "Оператор: Оцените, пожалуйста, консультацию.\nКлиент: Всё отлично."}}},
  };
  return all;
}

const DomainTemplates& ForDomain(const std::string& domain) {
  static const DomainTemplates empty;
  auto it = AllDomainTemplates().find(domain);
  return it == AllDomainTemplates().end() ? empty : it->second;
}

}  // namespace

const std::vector<std::string>& DomainPiiTemplates(const std::string& domain) {
  return ForDomain(domain).pii;
}

const std::vector<std::string>& DomainCleanTemplates(const std::string& domain) {
  return ForDomain(domain).clean;
}

}  // namespace guardgate::evalkit::lexicon
